#pragma once

#include <array>
#include <functional>

#include "afc/response.hpp"

namespace afc {

struct NelderMead2DResult {
  std::array<double, 2> x{};
  double f = 0.0;
  int evaluations = 0;
  bool converged = false;
};

// Plain two-parameter Nelder-Mead. Converges when the simplex diameter falls
// below param_tol in every coordinate.
NelderMead2DResult nelder_mead_2d(const std::function<double(double, double)>& f,
                                  std::array<double, 2> start, std::array<double, 2> step,
                                  double param_tol, int max_evaluations);

// What "suppress dispersion over the band" means to the search:
//   suppression_order  - worst |r_M(w)| / w^5 over the outer band. The weight
//                        rewards the highest flatness order the two side-line
//                        parameters can buy, so the optimum coincides with the
//                        analytic third-order-cancellation point for every
//                        band width.
//   absolute_residual  - plain minimax of |r_M(w)| over the band. For wide
//                        bands this trades the cubic term against the quintic
//                        remainder and drifts off the analytic point.
enum class CompensationObjective { suppression_order, absolute_residual };

// Search (delta_o, fs_strength) for the given band [-w, w]. Seeded at the
// analytic design plus a perturbed restart; never returns a design worse than
// the analytic seed under the chosen objective. Parameter tolerance 1e-5.
// Throws OptimizationError (carrying the best iterate) on non-convergence.
MafcDesign optimize_compensation(double band_halfwidth, double omega,
                                 CompensationObjective objective =
                                     CompensationObjective::suppression_order);

// The band objective itself, exposed for recording comparisons.
double compensation_objective(const MafcDesign& design, double band_halfwidth,
                              CompensationObjective objective);

// Max |r_M| over [0, w] for a design (pole-form side lines).
double max_abs_mismatch(const MafcDesign& design, double band_halfwidth, int n_scan = 2001);

}  // namespace afc
