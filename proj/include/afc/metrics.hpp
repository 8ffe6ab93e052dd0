#pragma once

#include "afc/signal.hpp"
#include "afc/transfer.hpp"

namespace afc {

struct MetricsResult {
  double Q = 0.0;         // quantum efficiency, dephasing included
  double Q_tilde = 0.0;   // dispersion-plus-depth factor alone
  double F = 0.0;         // fidelity
  double inband_fraction = 1.0;
  double Q_err = 0.0;     // Richardson estimate from the halved grid
};

// Q = |kappa~|^2 int |Gamma|^2 I_p dw / int I_p dw (trapezoid). Throws
// UndefinedMetricError on zero input energy.
double quantum_efficiency(const TransferSpectrum& t, const SignalSpec& signal);

// F per the normalized-output-state overlap:
// F = |int Gamma |f_p|^2 dw|^2 / int |Gamma f_p|^2 dw. Throws
// UndefinedMetricError when nothing is retrieved.
double fidelity(const TransferSpectrum& t, const SignalSpec& signal);

// Infinite-depth consistency route: int |f_p|^2 / (1 + r^2) over the
// retrieved band (band-masked, not renormalized).
double fidelity_high_od(const MediumResponse& m, const SignalSpec& signal);

// All of the above plus the in-band fraction and a quadrature error estimate.
MetricsResult compute_metrics(const TransferSpectrum& t, const SignalSpec& signal);

// Paper-replica Gaussian closed form (its 0.9 constant is reproduced
// verbatim, not derived); evaluated with the scaled complementary error
// function so small y cannot overflow. Valid for 0 < y < 1. Never used as
// ground truth - the general quadrature is.
double qe_gaussian_paper(double y, double kappa_tilde);

// In-band energy of a unit Gaussian signal against a hard band edge:
// erf(sqrt(zeta) w / delta_p). The ceiling for any hard-edged memory.
double ideal_inband_fraction(double band_halfwidth, double delta_p);

}  // namespace afc
