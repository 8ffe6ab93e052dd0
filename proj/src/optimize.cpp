#include "afc/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "afc/errors.hpp"

namespace afc {

NelderMead2DResult nelder_mead_2d(const std::function<double(double, double)>& f,
                                  std::array<double, 2> start, std::array<double, 2> step,
                                  double param_tol, int max_evaluations) {
  struct Vertex {
    std::array<double, 2> x;
    double f;
  };
  int evals = 0;
  auto eval = [&](const std::array<double, 2>& x) {
    ++evals;
    return f(x[0], x[1]);
  };

  std::array<Vertex, 3> v;
  v[0] = {start, eval(start)};
  v[1] = {{start[0] + step[0], start[1]}, 0.0};
  v[1].f = eval(v[1].x);
  v[2] = {{start[0], start[1] + step[1]}, 0.0};
  v[2].f = eval(v[2].x);

  auto order = [&] { std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.f < b.f; }); };

  NelderMead2DResult res;
  while (evals < max_evaluations) {
    order();
    const double dx = std::max(std::abs(v[1].x[0] - v[0].x[0]), std::abs(v[2].x[0] - v[0].x[0]));
    const double dy = std::max(std::abs(v[1].x[1] - v[0].x[1]), std::abs(v[2].x[1] - v[0].x[1]));
    if (dx < param_tol && dy < param_tol) {
      res.converged = true;
      break;
    }

    const std::array<double, 2> c = {0.5 * (v[0].x[0] + v[1].x[0]), 0.5 * (v[0].x[1] + v[1].x[1])};
    auto mix = [&](double t) {
      return std::array<double, 2>{c[0] + t * (c[0] - v[2].x[0]), c[1] + t * (c[1] - v[2].x[1])};
    };

    const auto xr = mix(1.0);
    const double fr = eval(xr);
    if (fr < v[0].f) {
      const auto xe = mix(2.0);
      const double fe = eval(xe);
      if (fe < fr) v[2] = {xe, fe};
      else v[2] = {xr, fr};
    } else if (fr < v[1].f) {
      v[2] = {xr, fr};
    } else {
      const bool outside = fr < v[2].f;
      const auto xc = mix(outside ? 0.5 : -0.5);
      const double fc = eval(xc);
      if (fc < std::min(fr, v[2].f)) {
        v[2] = {xc, fc};
      } else {
        // shrink toward the best vertex
        for (int i = 1; i < 3; ++i) {
          v[i].x = {0.5 * (v[i].x[0] + v[0].x[0]), 0.5 * (v[i].x[1] + v[0].x[1])};
          v[i].f = eval(v[i].x);
        }
      }
    }
  }
  order();
  res.x = v[0].x;
  res.f = v[0].f;
  res.evaluations = evals;
  return res;
}

double compensation_objective(const MafcDesign& design, double w,
                              CompensationObjective objective) {
  // Closed-form scan; the pole form keeps this a pure function of
  // (delta_o, fs_strength) with no side-line-width dependence.
  const int n = 2001;
  const double q = 0.5 * design.delta_o;
  // Designs whose poles intrude into the band are simply bad, not errors.
  if (q <= w * 1.0001 || design.delta_o <= 1.0001) return 1e12;
  // The w/50 floor keeps the 1/w^5 weight high enough to pin the linear and
  // cubic Taylor terms while staying far above cancellation noise.
  const double w_lo = (objective == CompensationObjective::suppression_order) ? 0.02 * w : 0.0;
  double worst = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double x = w_lo + (w - w_lo) * i / n;
    const double rm = rect_afc_response_closed(std::min(x, 0.499999)) +
                      (design.fs_strength / M_PI) * 2.0 * x / (q * q - x * x);
    double val = std::abs(rm);
    if (objective == CompensationObjective::suppression_order) val /= std::pow(x, 5);
    worst = std::max(worst, val);
  }
  return worst;
}

double max_abs_mismatch(const MafcDesign& design, double w, int n_scan) {
  double worst = 0.0;
  for (int i = 1; i <= n_scan; ++i) {
    const double x = w * i / n_scan;
    const double rm = rect_afc_response_closed(x) + sideline_response_closed(x, design);
    worst = std::max(worst, std::abs(rm));
  }
  return worst;
}

MafcDesign optimize_compensation(double band_halfwidth, double omega,
                                 CompensationObjective objective) {
  if (!(band_halfwidth > 0 && band_halfwidth < 0.5))
    throw InputError("optimization band must satisfy 0 < w < 1/2");

  auto f = [&](double delta_o, double fs) {
    MafcDesign d{delta_o, fs, omega};
    return compensation_objective(d, band_halfwidth, objective);
  };

  const MafcDesign seed = compensation_params(omega);
  const int budget = 4000;
  NelderMead2DResult best{};
  best.f = std::numeric_limits<double>::infinity();
  bool any_converged = false;
  // Analytic seed plus a displaced restart; the restart guards against the
  // seed sitting on a simplex-degenerate configuration.
  const std::array<std::array<double, 2>, 2> starts = {{{seed.delta_o, seed.fs_strength},
                                                        {2.1, 1.1}}};
  for (const auto& s : starts) {
    auto r = nelder_mead_2d(f, s, {0.05, 0.05}, 1e-5, budget);
    any_converged = any_converged || r.converged;
    if (r.f < best.f) best = r;
  }

  const double f_seed = f(seed.delta_o, seed.fs_strength);
  if (f_seed <= best.f) {
    best.x = {seed.delta_o, seed.fs_strength};
    best.f = f_seed;
  }
  if (!any_converged) {
    throw OptimizationError("compensation search did not converge", best.x[0], best.x[1], best.f);
  }
  MafcDesign out{best.x[0], best.x[1], omega};
  out.validate();
  return out;
}

}  // namespace afc
