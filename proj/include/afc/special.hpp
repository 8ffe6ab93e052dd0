#pragma once

namespace afc {

// zeta = 4 ln 2; converts between FWHM and Gaussian exponent throughout.
inline constexpr double kZeta = 2.772588722239781;

// Imaginary error function erfi(x) = -i erf(ix) = (2/sqrt(pi)) int_0^x e^{t^2} dt.
// Relative accuracy better than 1e-12 for |x| <= 12; +/-inf past the
// double-precision overflow point.
double erfi(double x);

// Scaled complementary error function erfcx(x) = e^{x^2} erfc(x), overflow-free
// for all x >= 0.
double erfcx(double x);

// Dawson integral D(x) = e^{-x^2} int_0^x e^{t^2} dt.
double dawson(double x);

}  // namespace afc
