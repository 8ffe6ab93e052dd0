#include "afc/metrics.hpp"

#include <cmath>

#include "afc/errors.hpp"
#include "afc/special.hpp"

namespace afc {

namespace {

double trapz(const std::vector<double>& f, double h, int stride = 1) {
  double s = 0.0;
  int count = 0;
  double prev = 0.0;
  for (size_t i = 0; i < f.size(); i += stride) {
    if (count > 0) s += 0.5 * (prev + f[i]);
    prev = f[i];
    ++count;
  }
  return s * h * stride;
}

double qe_on_grid(const TransferSpectrum& t, const SignalSpec& signal, int stride) {
  const int n = t.size();
  std::vector<double> num, den;
  num.reserve(n);
  den.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double ip = std::norm(signal.amplitude[i]);
    num.push_back(std::norm(t.gamma[i]) * (t.band_mask[i] ? ip : 0.0));
    den.push_back(ip);
  }
  const double h = t.grid.spacing();
  const double e_in = trapz(den, h, stride);
  if (e_in <= 0) throw UndefinedMetricError("signal carries no energy on the grid");
  return std::norm(t.dephasing) * trapz(num, h, stride) / e_in;
}

}  // namespace

double quantum_efficiency(const TransferSpectrum& t, const SignalSpec& signal) {
  if (signal.grid.n != t.grid.n) throw InputError("signal and transfer grids differ");
  return qe_on_grid(t, signal, 1);
}

double fidelity(const TransferSpectrum& t, const SignalSpec& signal) {
  if (signal.grid.n != t.grid.n) throw InputError("signal and transfer grids differ");
  const int n = t.size();
  const double h = t.grid.spacing();
  std::complex<double> num_int = 0.0;
  double den_int = 0.0;
  for (int i = 0; i < n; ++i) {
    const double wgt = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    const std::complex<double> g = t.band_mask[i] ? t.gamma[i] : 0.0;
    const double ip = std::norm(signal.amplitude[i]);
    num_int += wgt * g * ip;
    den_int += wgt * std::norm(g) * ip;
  }
  num_int *= h;
  den_int *= h;
  if (den_int <= 0) throw UndefinedMetricError("nothing retrieved; fidelity undefined");
  return std::norm(num_int) / den_int;
}

double fidelity_high_od(const MediumResponse& m, const SignalSpec& signal) {
  if (signal.grid.n != m.grid.n) throw InputError("signal and response grids differ");
  const int n = m.size();
  std::vector<double> f(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (!m.band_mask[i] || !m.r_defined[i]) continue;
    f[i] = std::norm(signal.amplitude[i]) / (1.0 + m.r[i] * m.r[i]);
  }
  return trapz(f, m.grid.spacing(), 1);
}

MetricsResult compute_metrics(const TransferSpectrum& t, const SignalSpec& signal) {
  MetricsResult res;
  res.Q = quantum_efficiency(t, signal);
  const double k2 = std::norm(t.dephasing);
  res.Q_tilde = k2 > 0 ? res.Q / k2 : 0.0;
  res.F = fidelity(t, signal);
  // in-band signal energy fraction
  const int n = t.size();
  std::vector<double> inb(n, 0.0), all(n, 0.0);
  for (int i = 0; i < n; ++i) {
    all[i] = std::norm(signal.amplitude[i]);
    if (t.band_mask[i]) inb[i] = all[i];
  }
  const double h = t.grid.spacing();
  res.inband_fraction = trapz(inb, h) / trapz(all, h);
  res.Q_err = std::abs(res.Q - qe_on_grid(t, signal, 2));
  return res;
}

double qe_gaussian_paper(double y, double kappa_tilde) {
  if (!(y > 0)) throw InputError("qe_gaussian_paper needs y > 0");
  const double ay = 0.9 * std::abs(y);
  const double arg = 1.0 / (std::sqrt(2.0) * ay);
  // sqrt(pi/2)/(0.9 y) e^{arg^2} Erfc(arg), with the exponential folded into
  // erfcx so y -> 0 stays finite.
  return kappa_tilde * kappa_tilde * std::sqrt(M_PI / 2.0) / ay * erfcx(arg);
}

double ideal_inband_fraction(double band_halfwidth, double delta_p) {
  if (!(band_halfwidth > 0) || !(delta_p > 0))
    throw InputError("band halfwidth and signal bandwidth must be positive");
  return std::erf(std::sqrt(kZeta) * band_halfwidth / delta_p);
}

}  // namespace afc
