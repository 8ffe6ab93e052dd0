#pragma once

#include <complex>
#include <vector>

#include "afc/grid.hpp"

namespace afc {

// Input spectral amplitude f_p(w) sampled on a grid, unit norm:
// int |f_p|^2 dw = 1 (trapezoid). delta_p is the FWHM of |f_p|^2.
struct SignalSpec {
  DetuningGrid grid;
  std::vector<std::complex<double>> amplitude;
  double delta_p = 0.1;

  // Transform-limited Gaussian centered at w0, |f_p(w)|^2 FWHM = delta_p.
  static SignalSpec gaussian(const DetuningGrid& grid, double delta_p, double w0 = 0.0);

  // Normalize a caller-supplied amplitude in place; throws on zero energy.
  static SignalSpec from_samples(const DetuningGrid& grid,
                                 std::vector<std::complex<double>> amplitude, double delta_p);

  double norm2() const;  // trapezoid of |f_p|^2
};

}  // namespace afc
