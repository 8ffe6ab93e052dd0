#pragma once

#include <complex>
#include <vector>

#include "afc/response.hpp"
#include "afc/signal.hpp"

namespace afc {

// End-to-end memory transfer function for backward retrieval.
struct TransferSpectrum {
  DetuningGrid grid;
  std::vector<std::complex<double>> gamma;
  std::complex<double> dephasing = 1.0;  // kappa~(2pi/delta)
  std::vector<uint8_t> band_mask;

  int size() const { return grid.size(); }
};

// Single-pass field factor exp(-d/2 (1 - i r)) with d = d0 a(w).
std::complex<double> transmission_factor(double d, double r);
std::complex<double> transmission(const MediumResponse& m, int i);

// Complex retrieval efficiency
//   Gamma = (1 - exp(-d (1 - i r))) / (1 - i r),
// the decaying-exponent reading of the backward-retrieval solution. Limits:
// Gamma -> 1 at r = 0, d -> inf; Gamma ~ d at small d; |Gamma|^2 -> 1/(1+r^2)
// at large depth. d = 0 or undefined r (no absorber) give Gamma = 0.
std::complex<double> gamma_factor(double d, double r);
std::complex<double> gamma_at(const MediumResponse& m, int i);

// Assemble Gamma(w) per bin from a medium response and a tooth dephasing.
TransferSpectrum make_transfer(const MediumResponse& m, std::complex<double> dephasing = 1.0);

// kappa~ Gamma(w) f_p(w) per bin; out-of-band bins are zeroed. Throws
// CoverageError when more than 1% of the signal energy lies off the grid
// (estimated from the analytic tail of a Gaussian signal).
std::vector<std::complex<double>> retrieve_spectrum(const TransferSpectrum& t,
                                                    const SignalSpec& signal);

struct TimeTrace {
  std::vector<double> t;
  std::vector<std::complex<double>> a;

  double energy() const;  // sum |a|^2 dt
};

// Inverse transform of the retrieved spectrum, delayed by T. The spectral
// grid implies window 2pi/dw and resolution 2pi/(n dw); the Nyquist contract
// (window >= 4 signal durations, resolution <= duration/32, echo inside the
// window) is enforced up front via SamplingError.
TimeTrace retrieve_time(const TransferSpectrum& t, const SignalSpec& signal, double delay);

// Same transform for an arbitrary spectrum (no contract checks); used for
// input references.
TimeTrace to_time_domain(const DetuningGrid& grid,
                         const std::vector<std::complex<double>>& spectrum, double delay = 0.0);

}  // namespace afc
