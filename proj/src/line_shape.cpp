#include "afc/line_shape.hpp"

#include <cmath>

#include "afc/errors.hpp"
#include "afc/special.hpp"

namespace afc {

namespace {
LineShape make(ShapeKind k, double w) {
  if (!(w > 0) || !std::isfinite(w)) throw InputError("line width must be positive and finite");
  return LineShape{k, w};
}
}  // namespace

LineShape LineShape::gaussian(double fwhm) { return make(ShapeKind::gaussian, fwhm); }
LineShape LineShape::lorentzian(double hwhm) { return make(ShapeKind::lorentzian, hwhm); }
LineShape LineShape::rectangular(double full_width) {
  return make(ShapeKind::rectangular, full_width);
}

std::string LineShape::name() const {
  switch (kind) {
    case ShapeKind::gaussian: return "gaussian";
    case ShapeKind::lorentzian: return "lorentzian";
    case ShapeKind::rectangular: return "rectangular";
  }
  return "?";
}

double eval_shape(const LineShape& shape, double d) {
  if (!std::isfinite(d)) throw InputError("detuning must be finite");
  const double w = shape.width;
  switch (shape.kind) {
    case ShapeKind::gaussian:
      return std::sqrt(kZeta / M_PI) / w * std::exp(-kZeta * d * d / (w * w));
    case ShapeKind::lorentzian:
      return w / (M_PI * (d * d + w * w));
    case ShapeKind::rectangular: {
      const double half = 0.5 * w;
      const double ad = std::abs(d);
      if (ad < half) return 1.0 / w;
      if (ad > half) return 0.0;
      return 0.5 / w;  // midpoint convention at the edge
    }
  }
  return 0.0;
}

std::complex<double> tooth_transform(const LineShape& tooth, double t) {
  if (!std::isfinite(t)) throw InputError("time must be finite");
  const double w = tooth.width;
  switch (tooth.kind) {
    case ShapeKind::gaussian:
      return std::exp(-w * w * t * t / (4.0 * kZeta));
    case ShapeKind::lorentzian:
      return std::exp(-w * std::abs(t));
    case ShapeKind::rectangular: {
      const double x = 0.5 * w * t;
      if (x == 0.0) return 1.0;
      return std::sin(x) / x;
    }
  }
  return 0.0;
}

}  // namespace afc
