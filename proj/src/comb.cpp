#include "afc/comb.hpp"

#include <cmath>

#include "afc/errors.hpp"

namespace afc {

void CombSpec::validate(std::vector<std::string>* warnings) const {
  const double b = tooth.width;
  const double w_env = envelope.width;
  if (!(b < spacing)) throw InputError("comb requires tooth width b < spacing delta");
  if (!(spacing < w_env)) throw InputError("comb requires spacing delta < envelope width");
  if (warnings) {
    if (b / spacing > 0.2)
      warnings->push_back("comb ratio b/delta = " + std::to_string(b / spacing) +
                          " exceeds 0.2; finesse law degrades");
    if (spacing / w_env > 0.2)
      warnings->push_back("comb ratio delta/width = " + std::to_string(spacing / w_env) +
                          " exceeds 0.2; coarse-grained response degrades");
  }
}

SampledProfile build_comb(const CombSpec& spec, const DetuningGrid& grid) {
  spec.validate();
  const double b = spec.tooth.width;
  if (grid.spacing() > b / 5.0) {
    const int needed = static_cast<int>(std::ceil((grid.hi - grid.lo) / (b / 5.0))) + 1;
    throw ResolutionError("grid does not resolve comb teeth: need n >= " +
                          std::to_string(needed) + " samples over [" + std::to_string(grid.lo) +
                          ", " + std::to_string(grid.hi) + "]");
  }

  const double kappa0 = eval_shape(spec.tooth, 0.0);
  const double g_peak = eval_shape(spec.envelope, 0.0);

  // Teeth kept while the envelope weight at the tooth center stays above
  // 1e-6 of the peak (the comb is formally infinite).
  int n_half = 0;
  while (eval_shape(spec.envelope, (n_half + 1) * spec.spacing) > 1e-6 * g_peak) ++n_half;
  // Rectangular envelopes have no decaying tail; cover the full support.
  if (spec.envelope.kind == ShapeKind::rectangular)
    n_half = static_cast<int>(std::floor(0.5 * spec.envelope.width / spec.spacing + 1e-12));

  // Gaussian teeth die fast; Lorentzians need a wider reach before the
  // per-tooth contribution drops below the same 1e-6 cut.
  const double reach = (spec.tooth.kind == ShapeKind::lorentzian) ? 600.0 * b : 3.0 * b;

  SampledProfile out{grid, std::vector<double>(grid.size(), 0.0), "comb"};
  for (int i = 0; i < grid.size(); ++i) {
    const double d = grid.at(i);
    const double env = eval_shape(spec.envelope, d);
    if (env == 0.0) continue;
    double teeth = 0.0;
    const int n_lo = std::max(-n_half, static_cast<int>(std::floor((d - reach) / spec.spacing)));
    const int n_hi = std::min(n_half, static_cast<int>(std::ceil((d + reach) / spec.spacing)));
    for (int t = n_lo; t <= n_hi; ++t) teeth += eval_shape(spec.tooth, d - t * spec.spacing);
    out.values[i] = env * teeth / kappa0;
  }
  return out;
}

SampledProfile sample_shape(const LineShape& shape, const DetuningGrid& grid,
                            const std::string& label) {
  SampledProfile out{grid, std::vector<double>(grid.size()), label.empty() ? shape.name() : label};
  for (int i = 0; i < grid.size(); ++i) out.values[i] = eval_shape(shape, grid.at(i));
  return out;
}

double profile_mass(const SampledProfile& p) {
  const double h = p.grid.spacing();
  double s = 0.0;
  for (int i = 0; i + 1 < p.grid.size(); ++i) s += 0.5 * (p.values[i] + p.values[i + 1]);
  return s * h;
}

}  // namespace afc
