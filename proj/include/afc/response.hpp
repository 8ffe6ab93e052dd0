#pragma once

#include <string>
#include <vector>

#include "afc/comb.hpp"
#include "afc/grid.hpp"

namespace afc {

// Complex linear response of the medium, reduced to what retrieval needs:
// normalized absorption a(w) = alpha(w)/alpha(0), mismatch ratio
// r(w) = chi'(w)/chi''(w) and the peak optical depth d0 = alpha(0) L.
//
// Sign convention is fixed by the susceptibility definitions with chi'' < 0:
// r = -D(w)/a(w) where D is the principal-value transform of the absorption
// profile. Inside a single absorption line r falls through zero with negative
// slope (fast light); in a transparency window between lines the slope is
// positive (slow light).
struct MediumResponse {
  DetuningGrid grid;
  std::vector<double> a;
  std::vector<double> r;           // NaN where undefined (a == 0)
  std::vector<uint8_t> r_defined;
  std::vector<uint8_t> band_mask;  // hard-edged media: retrievable bins
  double d0 = 0.0;
  std::vector<std::string> warnings;

  int size() const { return grid.size(); }
};

// Two Lorentzian absorption lines at +/- delta_o/2 flanking a rectangular AFC.
// fs_strength is the product f_s kappa(0) delta as it enters the side-line
// susceptibility; omega is the side-line HWHM.
struct MafcDesign {
  double delta_o = 1.7320508075688772;  // sqrt(3)
  double fs_strength = 1.5;
  double omega = 0.01;

  void validate() const;  // delta_o > 1, omega << delta_o - 1
};

// Gaussian envelope closed forms: a = e^{-zeta w^2}, r = -Erfi(sqrt(zeta) w).
void gaussian_response_closed(double w, double& a, double& r);

// Rectangular-envelope AFC closed form inside the band |w| < 1/2:
// r_A = -(1/pi) ln((1/2 + w)/(1/2 - w)), a = 1. Throws OutOfBandError outside.
double rect_afc_response_closed(double w);

// Side-line dispersion contribution (pole form, side-line width neglected):
// r_s = (1/pi) fs_strength 2 w / ((delta_o/2)^2 - w^2) for |w| < delta_o/2.
// Throws PoleError at the poles.
double sideline_response_closed(double w, const MafcDesign& design);

// Eq.-38 analytic compensation point: delta_o = sqrt(3), fs_strength = 3/2.
MafcDesign compensation_params(double omega = 0.01);

// Residual side-line absorption ratio 2 alpha_s(0)/alpha_o =
// (4/pi) fs_strength omega / (delta_o/2)^2. Must stay << 1.
double residual_absorption_ratio(const MafcDesign& design);

// Composite MAFC response on a grid: r_M = r_A + r_s inside the band,
// a = 1 in band. When the residual absorption ratio reaches 0.1 the
// side-line absorption is added to a with a design warning.
MediumResponse mafc_response(const MafcDesign& design, const DetuningGrid& grid, double d0);

// Sampled closed-form media on a grid.
MediumResponse gaussian_response(const DetuningGrid& grid, double d0);
MediumResponse rect_afc_response(const DetuningGrid& grid, double d0);  // no side lines

// Generic route: absorption profile -> (a, r) via pv_hilbert. r is flagged
// undefined where the profile vanishes.
MediumResponse response_from_profile(const SampledProfile& profile, double d0);

}  // namespace afc
