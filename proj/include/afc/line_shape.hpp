#pragma once

#include <complex>
#include <string>

namespace afc {

enum class ShapeKind { gaussian, lorentzian, rectangular };

// Unit-area spectral line shape. The width parameter means FWHM for gaussian,
// HWHM for lorentzian and the full support width for rectangular.
struct LineShape {
  ShapeKind kind = ShapeKind::gaussian;
  double width = 1.0;

  static LineShape gaussian(double fwhm);
  static LineShape lorentzian(double hwhm);
  static LineShape rectangular(double full_width);

  std::string name() const;
};

// Normalized density at detuning d. Rectangular edges take the half value at
// the exact discontinuity.
double eval_shape(const LineShape& shape, double d);

// kappa~(t) = int dD shape(D) e^{-iDt}. Real for the symmetric shapes here;
// kappa~(0) = 1 exactly.
std::complex<double> tooth_transform(const LineShape& tooth, double t);

}  // namespace afc
