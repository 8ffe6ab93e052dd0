#include "afc/response.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "afc/errors.hpp"
#include "afc/hilbert.hpp"
#include "afc/special.hpp"

namespace afc {

namespace {
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
}

void MafcDesign::validate() const {
  if (!(delta_o > 1.0))
    throw InputError("side lines must sit outside the comb band: delta_o > 1 required");
  if (!(omega > 0)) throw InputError("side-line width must be positive");
  if (!(omega < 0.5 * (delta_o - 1.0)))
    throw InputError("side-line width omega must be small against delta_o - 1");
  if (!(fs_strength > 0)) throw InputError("side-line strength must be positive");
}

void gaussian_response_closed(double w, double& a, double& r) {
  a = std::exp(-kZeta * w * w);
  r = -erfi(std::sqrt(kZeta) * w);
}

double rect_afc_response_closed(double w) {
  if (!(std::abs(w) < 0.5)) throw OutOfBandError("rect AFC response defined for |w| < 1/2");
  return -(1.0 / M_PI) * std::log((0.5 + w) / (0.5 - w));
}

double sideline_response_closed(double w, const MafcDesign& design) {
  const double q = 0.5 * design.delta_o;
  if (std::abs(std::abs(w) - q) < 1e-12) throw PoleError("side-line response evaluated at pole");
  if (!(std::abs(w) < q)) throw OutOfBandError("side-line pole form valid for |w| < delta_o/2");
  return (design.fs_strength / M_PI) * 2.0 * w / (q * q - w * w);
}

MafcDesign compensation_params(double omega) {
  MafcDesign d;
  d.delta_o = std::sqrt(3.0);
  d.fs_strength = 1.5;
  d.omega = omega;
  d.validate();
  return d;
}

double residual_absorption_ratio(const MafcDesign& design) {
  design.validate();
  const double q = 0.5 * design.delta_o;
  return (4.0 / M_PI) * design.fs_strength * design.omega / (q * q);
}

MediumResponse mafc_response(const MafcDesign& design, const DetuningGrid& grid, double d0) {
  design.validate();
  MediumResponse m;
  m.grid = grid;
  m.d0 = d0;
  m.a.assign(grid.size(), 0.0);
  m.r.assign(grid.size(), kNan);
  m.r_defined.assign(grid.size(), 0);
  m.band_mask.assign(grid.size(), 0);

  const double ratio = residual_absorption_ratio(design);
  const bool add_residual = ratio >= 0.1;
  if (add_residual) {
    m.warnings.push_back("side-line residual absorption ratio " + std::to_string(ratio) +
                         " exceeds 0.1; added to in-band absorption");
  }

  for (int i = 0; i < grid.size(); ++i) {
    const double w = grid.at(i);
    if (std::abs(w) >= 0.5) continue;  // outside the hard-edged band: lost
    m.band_mask[i] = 1;
    double a = 1.0;
    if (add_residual) {
      const double q = 0.5 * design.delta_o;
      const double ls = eval_shape(LineShape::lorentzian(design.omega), w - q) +
                        eval_shape(LineShape::lorentzian(design.omega), w + q);
      a += 2.0 * design.fs_strength * ls;
    }
    m.a[i] = a;
    m.r[i] = rect_afc_response_closed(w) + sideline_response_closed(w, design);
    m.r_defined[i] = 1;
  }
  return m;
}

MediumResponse gaussian_response(const DetuningGrid& grid, double d0) {
  MediumResponse m;
  m.grid = grid;
  m.d0 = d0;
  m.a.assign(grid.size(), 0.0);
  m.r.assign(grid.size(), 0.0);
  m.r_defined.assign(grid.size(), 1);
  m.band_mask.assign(grid.size(), 1);
  for (int i = 0; i < grid.size(); ++i) gaussian_response_closed(grid.at(i), m.a[i], m.r[i]);
  return m;
}

MediumResponse rect_afc_response(const DetuningGrid& grid, double d0) {
  MediumResponse m;
  m.grid = grid;
  m.d0 = d0;
  m.a.assign(grid.size(), 0.0);
  m.r.assign(grid.size(), kNan);
  m.r_defined.assign(grid.size(), 0);
  m.band_mask.assign(grid.size(), 0);
  for (int i = 0; i < grid.size(); ++i) {
    const double w = grid.at(i);
    if (std::abs(w) >= 0.5) continue;
    m.band_mask[i] = 1;
    m.a[i] = 1.0;
    m.r[i] = rect_afc_response_closed(w);
    m.r_defined[i] = 1;
  }
  return m;
}

MediumResponse response_from_profile(const SampledProfile& profile, double d0) {
  HilbertResult h = pv_hilbert(profile);
  MediumResponse m;
  m.grid = profile.grid;
  m.d0 = d0;
  m.warnings = h.warnings;
  const int n = profile.grid.size();
  m.a.assign(n, 0.0);
  m.r.assign(n, kNan);
  m.r_defined.assign(n, 0);
  m.band_mask.assign(n, 1);

  // d0 refers to alpha(0) L, so a is normalized at band center, not at the
  // global peak (MAFC side lines tower above the comb).
  double ref = profile.values[profile.grid.nearest_index(0.0)];
  if (ref <= 0) {
    for (double v : profile.values) ref = std::max(ref, v);
  }
  if (ref <= 0) throw InputError("profile has no absorption");

  for (int i = 0; i < n; ++i) {
    m.a[i] = profile.values[i] / ref;
    if (profile.values[i] > 0) {
      m.r[i] = -h.values[i] / profile.values[i];
      m.r_defined[i] = 1;
    }
  }
  return m;
}

}  // namespace afc
