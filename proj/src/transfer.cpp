#include "afc/transfer.hpp"

#include <cmath>

#include "afc/errors.hpp"
#include "afc/fft.hpp"
#include "afc/special.hpp"

namespace afc {

std::complex<double> transmission_factor(double d, double r) {
  if (d == 0.0) return 1.0;
  return std::exp(std::complex<double>(-0.5 * d, 0.5 * d * r));
}

std::complex<double> transmission(const MediumResponse& m, int i) {
  const double d = m.d0 * m.a[i];
  return transmission_factor(d, m.r_defined[i] ? m.r[i] : 0.0);
}

std::complex<double> gamma_factor(double d, double r) {
  if (d <= 0.0 || !std::isfinite(r)) return 0.0;
  const std::complex<double> denom(1.0, -r);
  return (1.0 - std::exp(std::complex<double>(-d, d * r))) / denom;
}

std::complex<double> gamma_at(const MediumResponse& m, int i) {
  if (!m.band_mask[i]) return 0.0;
  if (!m.r_defined[i]) return 0.0;
  return gamma_factor(m.d0 * m.a[i], m.r[i]);
}

TransferSpectrum make_transfer(const MediumResponse& m, std::complex<double> dephasing) {
  TransferSpectrum t;
  t.grid = m.grid;
  t.dephasing = dephasing;
  t.band_mask = m.band_mask;
  t.gamma.resize(m.size());
  for (int i = 0; i < m.size(); ++i) t.gamma[i] = gamma_at(m, i);
  return t;
}

namespace {

void check_coverage(const TransferSpectrum& t, const SignalSpec& signal) {
  if (signal.grid.n != t.grid.n || signal.grid.lo != t.grid.lo || signal.grid.hi != t.grid.hi)
    throw InputError("signal and transfer grids differ");
  // Gaussian tail estimate of the off-grid energy.
  const double edge = std::min(std::abs(t.grid.lo), std::abs(t.grid.hi));
  const double off = 1.0 - std::erf(std::sqrt(kZeta) * edge / signal.delta_p);
  if (off > 0.01)
    throw CoverageError("more than 1% of the signal energy lies outside the grid");
}

}  // namespace

std::vector<std::complex<double>> retrieve_spectrum(const TransferSpectrum& t,
                                                    const SignalSpec& signal) {
  check_coverage(t, signal);
  std::vector<std::complex<double>> out(t.size());
  for (int i = 0; i < t.size(); ++i) {
    out[i] = t.band_mask[i] ? t.dephasing * t.gamma[i] * signal.amplitude[i] : 0.0;
  }
  return out;
}

double TimeTrace::energy() const {
  if (t.size() < 2) return 0.0;
  const double dt = t[1] - t[0];
  double s = 0.0;
  for (const auto& v : a) s += std::norm(v);
  return s * dt;
}

TimeTrace to_time_domain(const DetuningGrid& grid,
                         const std::vector<std::complex<double>>& spectrum, double delay) {
  const int n = grid.size();
  const double dw = grid.spacing();
  const double dt = 2.0 * M_PI / (n * dw);
  const int i0 = n / 2;

  // A(t_k) = (dw/2pi) sum_j F_j e^{-i w_j t_k} with w_j = w0 + j dw,
  // t_k = (k - i0) dt and dw dt = 2pi/n, so
  // e^{-i w_j t_k} = e^{-i w0 t_k} e^{-2pi i jk/n} e^{+2pi i j i0/n}.
  std::vector<std::complex<double>> x(n);
  for (int j = 0; j < n; ++j) {
    x[j] = spectrum[j] *
           std::exp(std::complex<double>(0.0, grid.at(j) * delay +
                                                  2.0 * M_PI * static_cast<double>(j) * i0 / n));
  }
  TimeTrace tr;
  tr.t.resize(n);
  tr.a.resize(n);
  const double w0 = grid.at(0);
  auto X = dft(x, -1);  // X_k = sum_j x_j e^{-2pi i kj/n}
  for (int k = 0; k < n; ++k) {
    const double tk = (k - i0) * dt;
    tr.t[k] = tk;
    tr.a[k] = X[k] * std::exp(std::complex<double>(0.0, -w0 * tk)) * (dw / (2.0 * M_PI));
  }
  return tr;
}

TimeTrace retrieve_time(const TransferSpectrum& t, const SignalSpec& signal, double delay) {
  const int n = t.grid.size();
  const double dw = t.grid.spacing();
  const double window = 2.0 * M_PI / dw;
  const double dt = window / n;
  const double duration = kZeta / signal.delta_p;  // Gaussian FWHM time-bandwidth pair
  if (window < 4.0 * duration)
    throw SamplingError("time window shorter than 4 signal durations; refine the grid spacing");
  if (dt > duration / 32.0)
    throw SamplingError("time resolution coarser than signal duration / 32; widen the grid");
  if (std::abs(delay) + 2.0 * duration > 0.5 * window)
    throw SamplingError("delayed echo does not fit in the time window");

  auto spec = retrieve_spectrum(t, signal);
  return to_time_domain(t.grid, spec, delay);
}

}  // namespace afc
