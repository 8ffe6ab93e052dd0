#include "afc/mb.hpp"

#include <algorithm>
#include <cmath>

#include "afc/errors.hpp"
#include "afc/fft.hpp"
#include "afc/special.hpp"

namespace afc::mb {

namespace {
constexpr double kStabilityFactor = 10.0;
}

AtomGrid AtomGrid::from_comb(const CombSpec& spec, int n_teeth_half, int bins_per_b, int n_z) {
  spec.validate();
  if (bins_per_b < 5) throw InputError("need at least 5 detuning bins per tooth width");
  AtomGrid g;
  g.n_z = n_z;
  g.revival_time = 2.0 * M_PI / spec.spacing;
  const double b = spec.tooth.width;
  const double du = b / bins_per_b;
  const int reach = static_cast<int>(std::lround(2.5 * b / du));
  const double kappa0 = eval_shape(spec.tooth, 0.0);
  for (int n = -n_teeth_half; n <= n_teeth_half; ++n) {
    const double center = n * spec.spacing;
    for (int j = -reach; j <= reach; ++j) {
      const double d = center + j * du;
      const double c = eval_shape(spec.envelope, d) * eval_shape(spec.tooth, j * du) / kappa0;
      g.detuning.push_back(d);
      g.weight.push_back(c * du);
    }
  }
  g.cbar0 = eval_shape(spec.envelope, 0.0) / (kappa0 * spec.spacing);
  return g;
}

AtomGrid AtomGrid::from_line(const LineShape& line, double half_span, int n_bins, int n_z) {
  if (n_bins < 5) throw InputError("need at least 5 detuning bins across the line");
  AtomGrid g;
  g.n_z = n_z;
  g.revival_time = 0.0;
  const double du = 2.0 * half_span / (n_bins - 1);
  for (int j = 0; j < n_bins; ++j) {
    const double d = -half_span + j * du;
    g.detuning.push_back(d);
    g.weight.push_back(eval_shape(line, d) * du);
  }
  g.cbar0 = eval_shape(line, 0.0);
  return g;
}

void AtomGrid::add_sidelines(const MafcDesign& design, double wing_span) {
  design.validate();
  if (cbar0 <= 0) throw InputError("add side lines after building the comb");
  const double q = 0.5 * design.delta_o;
  const double om = design.omega;
  // Density scale: side-line susceptibility carries f_s kappa(0) delta
  // relative to the comb's coarse-grained 1/(kappa(0) delta) bookkeeping,
  // i.e. density fs_strength * cbar0 * L_omega (envelope width = 1 units).
  const double amp = design.fs_strength * cbar0;
  auto add_bin = [&](double center_sign, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double d = center_sign * q + mid;
    // exact Lorentzian mass in the bin keeps slow wings honest
    const double mass = (std::atan(hi / om) - std::atan(lo / om)) / M_PI;
    detuning.push_back(d);
    weight.push_back(amp * mass);
  };
  for (double s : {-1.0, 1.0}) {
    // fine core: +/- 8 omega in omega/4 steps
    const int n_core = 64;
    for (int j = 0; j < n_core; ++j) {
      const double lo = -8.0 * om + j * (16.0 * om / n_core);
      add_bin(s, lo, lo + 16.0 * om / n_core);
    }
    // wings: geometric bins out to +/- wing_span
    double edge = 8.0 * om;
    while (edge < wing_span) {
      double next = std::min(edge * 1.35, wing_span);
      add_bin(s, edge, next);
      add_bin(s, -next, -edge);
      edge = next;
    }
  }
}

double AtomGrid::analytic_strength(double d0) const {
  if (cbar0 <= 0) throw InputError("atom grid has no absorption reference");
  return d0 / (2.0 * M_PI * cbar0);
}

double AtomGrid::max_abs_detuning() const {
  double m = 0.0;
  for (double d : detuning) m = std::max(m, std::abs(d));
  return m;
}

double AtomGrid::total_weight() const {
  double s = 0.0;
  for (double w : weight) s += w;
  return s;
}

double PulseSpec::duration() const { return kZeta / delta_p; }

std::complex<double> PulseSpec::amplitude(double t) const {
  const double u = t - t_center;
  const double tp = duration();
  return std::exp(-kZeta * u * u / (2.0 * tp * tp));
}

std::vector<double> FieldRecord::times() const {
  std::vector<double> t(a_in.size());
  for (size_t i = 0; i < t.size(); ++i) t[i] = t_start + dt * (i + 1);
  return t;
}

std::vector<double> RetrievalRecord::times() const {
  std::vector<double> t(a_back.size());
  for (size_t i = 0; i < t.size(); ++i) t[i] = t_start + dt * (i + 1);
  return t;
}

namespace {

// Shared marching core. Holds the coherence state split into re/im planes,
// z-contiguous per detuning bin, so the inner loops vectorize.
struct Engine {
  const AtomGrid& atoms;
  int K, M;  // detuning bins, z nodes (n_z + 1)
  double dt, dz, g, beta, eta, gam;
  std::vector<double> rot_c, rot_s;     // e^{-i D dt} per bin
  std::vector<double> s_re, s_im;       // S[k*M + m]
  std::vector<double> p_re, p_im;       // <S> per node
  std::vector<double> a_re, a_im;       // field per node

  Engine(const AtomGrid& a, double dt_) : atoms(a), dt(dt_) {
    K = static_cast<int>(a.detuning.size());
    M = a.n_z + 1;
    dz = 1.0 / a.n_z;
    const double bg = a.strength;
    if (!(bg > 0)) throw InputError("atom grid strength not set; calibrate first");
    g = beta = std::sqrt(bg);
    eta = 0.5 * g * dt;
    gam = beta * eta * a.total_weight();
    const double dmax = a.max_abs_detuning();
    if (dt > 1.0 / (kStabilityFactor * dmax))
      throw StabilityError("time step too large: dt must be <= 1/(10 max|detuning|) = " +
                           std::to_string(1.0 / (kStabilityFactor * dmax)));
    rot_c.resize(K);
    rot_s.resize(K);
    for (int k = 0; k < K; ++k) {
      rot_c[k] = std::cos(a.detuning[k] * dt);
      rot_s[k] = -std::sin(a.detuning[k] * dt);
    }
    s_re.assign(static_cast<size_t>(K) * M, 0.0);
    s_im.assign(static_cast<size_t>(K) * M, 0.0);
    p_re.assign(M, 0.0);
    p_im.assign(M, 0.0);
    a_re.assign(M, 0.0);
    a_im.assign(M, 0.0);
  }

  // Rotate every coherence by e^{-iD dt} with the half-step drive from the
  // current field folded in, accumulating the macroscopic coherence.
  void rotate_reduce() {
    std::fill(p_re.begin(), p_re.end(), 0.0);
    std::fill(p_im.begin(), p_im.end(), 0.0);
    for (int k = 0; k < K; ++k) {
      const double c = rot_c[k], s = rot_s[k], w = atoms.weight[k];
      double* re = &s_re[static_cast<size_t>(k) * M];
      double* im = &s_im[static_cast<size_t>(k) * M];
      for (int m = 0; m < M; ++m) {
        const double xr = re[m] - eta * a_im[m];
        const double xi = im[m] + eta * a_re[m];
        const double yr = xr * c - xi * s;
        const double yi = xr * s + xi * c;
        re[m] = yr;
        im[m] = yi;
        p_re[m] += w * yr;
        p_im[m] += w * yi;
      }
    }
  }

  // Complete the trapezoidal drive with the freshly marched field.
  void finish_drive() {
    for (int k = 0; k < K; ++k) {
      double* re = &s_re[static_cast<size_t>(k) * M];
      double* im = &s_im[static_cast<size_t>(k) * M];
      for (int m = 0; m < M; ++m) {
        re[m] -= eta * a_im[m];
        im[m] += eta * a_re[m];
      }
    }
  }

  // dA/dz = i beta <S> - gam A (the gam term is the implicit part of the
  // coherences' instantaneous response), trapezoid from the input boundary.
  void march_forward(std::complex<double> boundary) {
    const double c1 = 1.0 - 0.5 * gam * dz;
    const double c2 = 1.0 / (1.0 + 0.5 * gam * dz);
    a_re[0] = boundary.real();
    a_im[0] = boundary.imag();
    for (int m = 0; m < M - 1; ++m) {
      const double sr = p_re[m] + p_re[m + 1];
      const double si = p_im[m] + p_im[m + 1];
      a_re[m + 1] = (a_re[m] * c1 - 0.5 * beta * dz * si) * c2;
      a_im[m + 1] = (a_im[m] * c1 + 0.5 * beta * dz * sr) * c2;
    }
  }

  // Backward field: -dA/dz = i beta <S> - gam A, zero at z = 1, read at z=0.
  void march_backward() {
    const double c1 = 1.0 - 0.5 * gam * dz;
    const double c2 = 1.0 / (1.0 + 0.5 * gam * dz);
    a_re[M - 1] = 0.0;
    a_im[M - 1] = 0.0;
    for (int m = M - 1; m > 0; --m) {
      const double sr = p_re[m] + p_re[m - 1];
      const double si = p_im[m] + p_im[m - 1];
      a_re[m - 1] = (a_re[m] * c1 - 0.5 * beta * dz * si) * c2;
      a_im[m - 1] = (a_im[m] * c1 + 0.5 * beta * dz * sr) * c2;
    }
  }

  double stored_energy() const {
    // (beta/g) sum_k w_k |S_k|^2 integrated over z (trapezoid); beta = g.
    double total = 0.0;
    for (int m = 0; m < M; ++m) {
      double col = 0.0;
      for (int k = 0; k < K; ++k) {
        const size_t i = static_cast<size_t>(k) * M + m;
        col += atoms.weight[k] * (s_re[i] * s_re[i] + s_im[i] * s_im[i]);
      }
      total += (m == 0 || m == M - 1) ? 0.5 * col : col;
    }
    return total * dz;
  }

  void flip_coherences() {
    for (auto& v : s_re) v = -v;
    for (auto& v : s_im) v = -v;
  }
};

}  // namespace

FieldRecord simulate_storage(const AtomGrid& atoms, const PulseSpec& pulse, double t_start,
                             double t_end, double dt) {
  if (!(t_end > t_start)) throw InputError("storage window is empty");
  Engine e(atoms, dt);
  const int steps = static_cast<int>(std::lround((t_end - t_start) / dt));

  FieldRecord rec;
  rec.t_start = t_start;
  rec.dt = dt;
  rec.a_in.reserve(steps);
  rec.a_out.reserve(steps);

  double t = t_start;
  e.a_re[0] = pulse.amplitude(t).real();
  e.a_im[0] = pulse.amplitude(t).imag();
  for (int n = 0; n < steps; ++n) {
    e.rotate_reduce();
    e.march_forward(pulse.amplitude(t + dt));
    e.finish_drive();
    t += dt;
    const std::complex<double> ain(pulse.amplitude(t));
    const std::complex<double> aout(e.a_re[e.M - 1], e.a_im[e.M - 1]);
    rec.a_in.push_back(ain);
    rec.a_out.push_back(aout);
    rec.energy_in += std::norm(ain) * dt;
    rec.energy_out += std::norm(aout) * dt;
  }
  rec.t_end = t;
  rec.energy_stored = e.stored_energy();
  rec.coherence.resize(static_cast<size_t>(e.K) * e.M);
  for (size_t i = 0; i < rec.coherence.size(); ++i)
    rec.coherence[i] = {e.s_re[i], e.s_im[i]};
  return rec;
}

RetrievalRecord simulate_backward_retrieval(const AtomGrid& atoms, const PulseSpec& pulse,
                                            const FieldRecord& record, double t_end) {
  const double t1 = record.t_end;
  if (t1 < pulse.t_center + 2.0 * pulse.duration())
    throw ProtocolError("switch before the input pulse has fully entered");
  if (atoms.revival_time > 0 && t1 >= atoms.revival_time)
    throw ProtocolError("switch after the first coherence revival");
  if (!(t_end > t1)) throw InputError("retrieval window is empty");

  Engine e(atoms, record.dt);
  if (record.coherence.size() != e.s_re.size())
    throw InputError("stored record does not match the atom grid");
  for (size_t i = 0; i < record.coherence.size(); ++i) {
    e.s_re[i] = record.coherence[i].real();
    e.s_im[i] = record.coherence[i].imag();
  }
  // The two counterpropagating pi pulses shuttle the coherence through the
  // shelving state and back; the round trip multiplies S by -1.
  e.flip_coherences();

  const int steps = static_cast<int>(std::lround((t_end - t1) / record.dt));
  RetrievalRecord out;
  out.t_start = t1;
  out.dt = record.dt;
  out.a_back.reserve(steps);
  for (int n = 0; n < steps; ++n) {
    e.rotate_reduce();
    e.march_backward();
    e.finish_drive();
    const std::complex<double> ab(e.a_re[0], e.a_im[0]);
    out.a_back.push_back(ab);
    out.energy_back += std::norm(ab) * record.dt;
  }
  out.energy_stored_end = e.stored_energy();
  return out;
}

namespace {

// -ln of the w = 0 intensity transmission of a storage run; the zero bin of
// the DFT is a plain sum over the record. The window covers +/- 3 pulse
// durations (tail truncation ~3e-7) and must end before the first revival.
double measure_depth(const AtomGrid& atoms, double dt) {
  PulseSpec probe{0.25, 0.0};
  const double half = 3.0 * probe.duration();
  if (atoms.revival_time > 0 && half >= atoms.revival_time)
    throw ProtocolError("comb revives before the calibration probe has passed");
  FieldRecord rec = simulate_storage(atoms, probe, -half, half, dt);
  std::complex<double> sin_ = 0.0, sout = 0.0;
  for (size_t i = 0; i < rec.a_in.size(); ++i) {
    sin_ += rec.a_in[i];
    sout += rec.a_out[i];
  }
  return -2.0 * std::log(std::abs(sout / sin_));
}

}  // namespace

int calibrate_strength(AtomGrid& atoms, double d0, double dt) {
  if (!(d0 > 0)) throw InputError("calibration requires d0 > 0");
  const double tol = 1e-4;
  int runs = 0;
  auto depth = [&](double p) {
    atoms.strength = p;
    ++runs;
    return measure_depth(atoms, dt);
  };

  double p = atoms.analytic_strength(d0);
  double d = depth(p);
  if (std::abs(d - d0) <= tol) return runs;

  // Depth is essentially proportional to strength; rescale, then bracket.
  p *= d0 / d;
  d = depth(p);
  if (std::abs(d - d0) <= tol) return runs;

  double lo = p, hi = p;
  double dlo = d, dhi = d;
  double span = 0.002 * p;
  while (dlo > d0) {
    lo -= span;
    span *= 2;
    dlo = depth(lo);
  }
  span = 0.002 * p;
  while (dhi < d0) {
    hi += span;
    span *= 2;
    dhi = depth(hi);
  }
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double dm = depth(mid);
    if (std::abs(dm - d0) <= tol) {
      atoms.strength = mid;
      return runs;
    }
    if (dm < d0) lo = mid;
    else hi = mid;
  }
  throw StabilityError("calibration bisection failed to reach 1e-4 on the optical depth");
}

GammaProbe empirical_gamma(const AtomGrid& atoms, const PulseSpec& pulse,
                           std::complex<double> kappa_tilde, double t_start, double t_switch,
                           double t_end, double dt) {
  if (atoms.revival_time <= 0)
    throw ProtocolError("empirical gamma needs a comb (periodic revival)");
  FieldRecord stor = simulate_storage(atoms, pulse, t_start, t_switch, dt);
  RetrievalRecord ret = simulate_backward_retrieval(atoms, pulse, stor, t_end);

  // Zero-padded common time base from t_start with step dt.
  const size_t n_stor = stor.a_in.size();
  const size_t n_tot = n_stor + ret.a_back.size();
  std::vector<std::complex<double>> ain(n_tot, 0.0), aback(n_tot, 0.0);
  for (size_t i = 0; i < n_stor; ++i) ain[i] = stor.a_in[i];
  for (size_t i = 0; i < ret.a_back.size(); ++i) aback[n_stor + i] = ret.a_back[i];

  auto fin = dft(ain, +1);    // sign +1: sum a_n e^{+2pi i kn/N} ~ e^{+i w t}
  auto fback = dft(aback, +1);

  GammaProbe probe;
  const int n = static_cast<int>(n_tot);
  double peak = 0.0;
  for (const auto& v : fin) peak = std::max(peak, std::abs(v));

  // unshifted DFT frequencies -> ascending order
  std::vector<int> order(n);
  for (int j = 0; j < n; ++j) order[j] = j;
  auto freq = [&](int j) {
    const int jj = j <= n / 2 ? j : j - n;
    return 2.0 * M_PI * jj / (n * dt);
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return freq(a) < freq(b); });

  for (int idx : order) {
    const double w = freq(idx);
    probe.omega.push_back(w);
    const bool ok = std::abs(fin[idx]) >= 0.01 * peak;
    probe.resolved.push_back(ok ? 1 : 0);
    if (!ok) {
      probe.gamma.push_back(0.0);
      continue;
    }
    // Both FTs carry the same e^{i w t_start} offset, which cancels in the
    // ratio; only the revival delay must be referenced out.
    const std::complex<double> ph = std::exp(std::complex<double>(0.0, -w * atoms.revival_time));
    probe.gamma.push_back(fback[idx] * ph / (kappa_tilde * fin[idx]));
  }
  return probe;
}

std::complex<double> zode_gamma(double d, double r, int n_z) {
  if (d == 0.0) return 0.0;
  if (n_z < 2) throw InputError("zode_gamma needs n_z >= 2");
  const std::complex<double> lam = std::complex<double>(-0.5 * d, 0.5 * d * r);  // per unit z
  const double h = 1.0 / n_z;
  auto f = [&](double y, std::complex<double> b) {
    return lam * b + d * std::exp(lam * (1.0 - y));
  };
  std::complex<double> b = 0.0;
  double y = 0.0;
  for (int i = 0; i < n_z; ++i) {
    const auto k1 = f(y, b);
    const auto k2 = f(y + 0.5 * h, b + 0.5 * h * k1);
    const auto k3 = f(y + 0.5 * h, b + 0.5 * h * k2);
    const auto k4 = f(y + h, b + h * k3);
    b += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    y += h;
  }
  return b;
}

}  // namespace afc::mb
