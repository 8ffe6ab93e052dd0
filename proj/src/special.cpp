#include "afc/special.hpp"

#include <cmath>
#include <limits>

namespace afc {

namespace {
constexpr double kTwoOverSqrtPi = 1.1283791670955126;
constexpr double kOneOverSqrtPi = 0.5641895835477563;
}  // namespace

double erfi(double x) {
  if (std::isnan(x)) return x;
  const double ax = std::abs(x);
  if (ax == 0.0) return x;
  // e^{x^2} overflows; erfi does too.
  if (ax > 26.6) return x > 0 ? std::numeric_limits<double>::infinity()
                              : -std::numeric_limits<double>::infinity();
  // All-positive Taylor series: x^{2k+1} / (k! (2k+1)). No cancellation, so
  // plain summation holds relative accuracy at any representable magnitude.
  const double x2 = ax * ax;
  double term = ax;
  double sum = ax;
  for (int k = 1; k < 2000; ++k) {
    term *= x2 / k;
    const double add = term / (2 * k + 1);
    sum += add;
    if (add < sum * 1e-17) break;
  }
  const double r = kTwoOverSqrtPi * sum;
  return x > 0 ? r : -r;
}

double erfcx(double x) {
  if (std::isnan(x)) return x;
  if (x < 0.0) {
    // erfcx(-x) = 2 e^{x^2} - erfcx(x); overflows for x < -26.6 as it must.
    return 2.0 * std::exp(x * x) - erfcx(-x);
  }
  if (x < 26.0) {
    // erfc stays in the normal range here and exp(x^2) < DBL_MAX.
    return std::exp(x * x) * std::erfc(x);
  }
  // Asymptotic series, already at ~1e-14 by the x = 26 handover.
  const double ix2 = 1.0 / (x * x);
  double s = 1.0 + ix2 * (-0.5 + ix2 * (0.75 + ix2 * (-1.875 + ix2 * 6.5625)));
  return kOneOverSqrtPi / x * s;
}

double dawson(double x) {
  const double ax = std::abs(x);
  if (ax < 5.0) {
    return 0.8862269254527580 * std::exp(-x * x) * erfi(x);  // sqrt(pi)/2
  }
  // Asymptotic tail; the e^{-x^2} route loses precision out here.
  const double ix2 = 1.0 / (x * x);
  double s = 1.0 + ix2 * (0.5 + ix2 * (0.75 + ix2 * (1.875 + ix2 * 6.5625)));
  return 0.5 / x * s;
}

}  // namespace afc
