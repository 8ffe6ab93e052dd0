#include "afc/experiments.hpp"

#include <array>
#include <cmath>
#include <filesystem>
#include <functional>
#include <thread>

#include "afc/csv.hpp"
#include "afc/errors.hpp"
#include "afc/mb.hpp"
#include "afc/metrics.hpp"
#include "afc/optimize.hpp"
#include "afc/special.hpp"
#include "afc/transfer.hpp"

namespace afc {

namespace {

CombSpec comb_from(const ExperimentConfig& c) {
  CombSpec spec;
  spec.envelope = c.envelope_kind == "gaussian" ? LineShape::gaussian(c.envelope_width)
                                                : LineShape::rectangular(c.envelope_width);
  spec.tooth = LineShape::gaussian(c.b);
  spec.spacing = c.delta;
  return spec;
}

MafcDesign design_from(const ExperimentConfig& c) {
  if (c.mafc_auto) return compensation_params(c.omega);
  MafcDesign d{c.delta_o, c.fs_strength, c.omega};
  d.validate();
  return d;
}

std::complex<double> dephasing_from(const ExperimentConfig& c) {
  return tooth_transform(LineShape::gaussian(c.b), 2.0 * M_PI / c.delta);
}

std::vector<double> sweep_grid(const ExperimentConfig& c, double hard_max) {
  if (!c.deltap_sweep.empty()) {
    for (double y : c.deltap_sweep)
      if (!(y > 0) || y >= hard_max) throw ConfigError("sweep value outside (0, max)");
    return c.deltap_sweep;
  }
  std::vector<double> ys(c.sweep_points);
  const double hi = std::min(c.sweep_max, hard_max * 0.999);
  for (int i = 0; i < c.sweep_points; ++i)
    ys[i] = c.sweep_min + (hi - c.sweep_min) * i / (c.sweep_points - 1);
  return ys;
}

// Deterministic worker pool: static index assignment, results by slot.
void parallel_for(int n, int threads, const std::function<void(int)>& job) {
  threads = std::max(1, threads);
  if (threads == 1) {
    for (int i = 0; i < n; ++i) job(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (int i = t; i < n; i += threads) job(i);
    });
  }
  for (auto& th : pool) th.join();
}

// |Gamma|^2-weighted transfer on a grid; d0 = inf collapses to 1/(1+r^2).
TransferSpectrum transfer_from_response(const MediumResponse& m, std::complex<double> kap) {
  if (std::isinf(m.d0)) {
    TransferSpectrum t;
    t.grid = m.grid;
    t.dephasing = kap;
    t.band_mask = m.band_mask;
    t.gamma.resize(m.size());
    for (int i = 0; i < m.size(); ++i) {
      if (!m.band_mask[i] || !m.r_defined[i] || m.a[i] <= 0.0) {
        t.gamma[i] = 0.0;
      } else {
        t.gamma[i] = 1.0 / std::complex<double>(1.0, -m.r[i]);
      }
    }
    return t;
  }
  return make_transfer(m, kap);
}

RunOutput run_fig2(const ExperimentConfig& c, int threads) {
  RunOutput out;
  const auto ys = sweep_grid(c, 1.0);
  const double kap = std::abs(dephasing_from(c));
  const DetuningGrid grid = DetuningGrid::symmetric(c.grid_halfwidth, c.grid_n | 1);
  MediumResponse medium = gaussian_response(grid, c.d0);
  TransferSpectrum t = transfer_from_response(medium, kap);

  std::vector<std::array<double, 3>> rows(ys.size());
  parallel_for(static_cast<int>(ys.size()), threads, [&](int i) {
    const double y = ys[i];
    SignalSpec sig = SignalSpec::gaussian(grid, y);
    rows[i] = {y, qe_gaussian_paper(y, kap), quantum_efficiency(t, sig)};
  });

  CsvWriter csv({"deltap_over_width", "Q_G_eq22", "Q_quadrature"});
  for (auto& r : rows) csv.add_row({r[0], r[1], r[2]});
  out.files.emplace_back("fig2.csv", csv.str());
  return out;
}

RunOutput run_dispersion(const ExperimentConfig& c, int) {
  RunOutput out;
  const MafcDesign d = design_from(c);
  const int n = 441;
  CsvWriter csv({"omega", "r_afc", "r_sidelines", "r_mafc"});
  for (int i = 0; i < n; ++i) {
    const double w = -0.44 + 0.88 * i / (n - 1);
    const double ra = rect_afc_response_closed(w);
    const double rs = sideline_response_closed(w, d);
    csv.add_row({w, ra, rs, ra + rs});
  }
  out.files.emplace_back("dispersion.csv", csv.str());
  return out;
}

RunOutput run_mismatch(const ExperimentConfig& c, int) {
  RunOutput out;
  const MafcDesign d = design_from(c);
  const int n = 441;
  CsvWriter csv({"omega", "w_afc", "w_mafc"});
  for (int i = 0; i < n; ++i) {
    const double w = -0.44 + 0.88 * i / (n - 1);
    const double ra = rect_afc_response_closed(w);
    const double rm = ra + sideline_response_closed(w, d);
    csv.add_row({w, 1.0 / (1.0 + ra * ra), 1.0 / (1.0 + rm * rm)});
  }
  out.files.emplace_back("mismatch.csv", csv.str());
  return out;
}

RunOutput run_qecurve(const ExperimentConfig& c, int threads) {
  RunOutput out;
  const auto dps = sweep_grid(c, 2.0);
  const double kap = std::abs(dephasing_from(c));
  const DetuningGrid grid = DetuningGrid::symmetric(c.grid_halfwidth, c.grid_n | 1);

  const MafcDesign design = design_from(c);
  MediumResponse afc = rect_afc_response(grid, c.d0);
  MediumResponse mafc = mafc_response(design, grid, c.d0);
  for (const auto& w : mafc.warnings) out.warnings.push_back(w);
  TransferSpectrum t_afc = transfer_from_response(afc, kap);
  TransferSpectrum t_mafc = transfer_from_response(mafc, kap);

  std::vector<std::array<double, 6>> rows(dps.size());
  parallel_for(static_cast<int>(dps.size()), threads, [&](int i) {
    const double dp = dps[i];
    SignalSpec sig = SignalSpec::gaussian(grid, dp);
    rows[i] = {dp,
               quantum_efficiency(t_afc, sig),
               quantum_efficiency(t_mafc, sig),
               kap * kap * ideal_inband_fraction(0.5, dp),
               fidelity(t_afc, sig),
               fidelity(t_mafc, sig)};
  });

  CsvWriter csv({"deltap", "Q_afc", "Q_mafc", "Q_ideal", "F_afc", "F_mafc"});
  for (auto& r : rows) csv.add_row({r[0], r[1], r[2], r[3], r[4], r[5]});
  out.files.emplace_back("qecurve.csv", csv.str());
  return out;
}

RunOutput run_echo(const ExperimentConfig& c, int) {
  RunOutput out;
  if (std::isinf(c.d0)) throw ConfigError("echo needs a finite optical depth");
  CombSpec spec = comb_from(c);
  spec.validate(&out.warnings);

  mb::AtomGrid atoms = mb::AtomGrid::from_comb(spec, c.n_teeth_half, c.bins_per_b, c.n_z);
  if (c.envelope_kind == "rectangular") atoms.add_sidelines(design_from(c));
  mb::calibrate_strength(atoms, c.d0, c.dt);

  mb::PulseSpec pulse{c.deltap, 0.0};
  const double t0 = -3.0 * pulse.duration();
  const double t_end = atoms.revival_time + std::max(3.0 * pulse.duration(), 12.0);
  mb::FieldRecord stor = mb::simulate_storage(atoms, pulse, t0, c.t_switch, c.dt);
  mb::RetrievalRecord ret = mb::simulate_backward_retrieval(atoms, pulse, stor, t_end);

  CsvWriter csv({"tau", "re_in", "im_in", "abs2_in", "re_out", "im_out", "abs2_out", "re_ret",
                 "im_ret", "abs2_ret"});
  const auto ts = stor.times();
  for (size_t i = 0; i < ts.size(); ++i) {
    const auto ai = stor.a_in[i];
    const auto ao = stor.a_out[i];
    csv.add_row({ts[i], ai.real(), ai.imag(), std::norm(ai), ao.real(), ao.imag(), std::norm(ao),
                 0.0, 0.0, 0.0});
  }
  const auto tr = ret.times();
  for (size_t i = 0; i < tr.size(); ++i) {
    const auto ar = ret.a_back[i];
    csv.add_row({tr[i], 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, ar.real(), ar.imag(), std::norm(ar)});
  }
  out.files.emplace_back("echo.csv", csv.str());

  CsvWriter esum({"energy_in", "energy_transmitted", "energy_retrieved", "energy_left",
                  "retrieved_over_input"});
  esum.add_row({stor.energy_in, stor.energy_out, ret.energy_back, ret.energy_stored_end,
                ret.energy_back / stor.energy_in});
  out.files.emplace_back("echo_energy.csv", esum.str());
  return out;
}

RunOutput run_custom(const ExperimentConfig& c, int threads) {
  RunOutput out;
  const double kap = std::abs(dephasing_from(c));
  const DetuningGrid grid = DetuningGrid::symmetric(c.grid_halfwidth, c.grid_n | 1);

  // engraved comb profile, resolved to >= 5 samples per tooth width
  {
    CombSpec spec = comb_from(c);
    spec.validate(&out.warnings);
    const double half = std::min(c.grid_halfwidth, 0.75 * c.envelope_width + 2.0 * c.delta);
    int n = static_cast<int>(std::ceil(2.0 * half / (c.b / 6.0))) | 1;
    auto comb = build_comb(spec, DetuningGrid::symmetric(half, n));
    CsvWriter pcsv({"detuning", "density"});
    for (int i = 0; i < comb.grid.size(); ++i) pcsv.add_row({comb.grid.at(i), comb.values[i]});
    out.files.emplace_back("profile.csv", pcsv.str());
  }

  MediumResponse medium;
  std::vector<double> r_a(grid.size(), 0.0), r_s(grid.size(), 0.0);
  if (c.envelope_kind == "gaussian") {
    medium = gaussian_response(grid, c.d0);
    for (int i = 0; i < grid.size(); ++i) r_a[i] = medium.r[i];
  } else {
    const MafcDesign d = design_from(c);
    medium = mafc_response(d, grid, c.d0);
    for (const auto& w : medium.warnings) out.warnings.push_back(w);
    for (int i = 0; i < grid.size(); ++i) {
      if (!medium.band_mask[i]) continue;
      r_a[i] = rect_afc_response_closed(grid.at(i));
      r_s[i] = sideline_response_closed(grid.at(i), d);
    }
  }

  CsvWriter resp({"omega", "a", "r", "r_afc", "r_sidelines", "r_mafc"});
  TransferSpectrum t = transfer_from_response(medium, kap);
  CsvWriter gcsv({"omega", "re_gamma", "im_gamma", "abs2_gamma"});
  for (int i = 0; i < grid.size(); ++i) {
    const double r = medium.r_defined[i] ? medium.r[i] : 0.0;
    resp.add_row({grid.at(i), medium.a[i], r, r_a[i], r_s[i], r_a[i] + r_s[i]});
    gcsv.add_row({grid.at(i), t.gamma[i].real(), t.gamma[i].imag(), std::norm(t.gamma[i])});
  }
  out.files.emplace_back("response.csv", resp.str());
  out.files.emplace_back("gamma.csv", gcsv.str());

  const auto dps = sweep_grid(c, 2.0);
  std::vector<std::array<double, 3>> rows(dps.size());
  parallel_for(static_cast<int>(dps.size()), threads, [&](int i) {
    SignalSpec sig = SignalSpec::gaussian(grid, dps[i]);
    rows[i] = {dps[i], quantum_efficiency(t, sig), fidelity(t, sig)};
  });
  CsvWriter mcsv({"deltap", "Q", "F"});
  for (auto& r : rows) mcsv.add_row({r[0], r[1], r[2]});
  out.files.emplace_back("metrics.csv", mcsv.str());
  return out;
}

}  // namespace

RunOutput run_experiment(const ExperimentConfig& c, int threads) {
  c.validate();
  if (c.experiment == "fig2") return run_fig2(c, threads);
  if (c.experiment == "dispersion") return run_dispersion(c, threads);
  if (c.experiment == "mismatch") return run_mismatch(c, threads);
  if (c.experiment == "qecurve") return run_qecurve(c, threads);
  if (c.experiment == "echo") return run_echo(c, threads);
  return run_custom(c, threads);
}

void write_outputs(const RunOutput& out, const ExperimentConfig& config,
                   const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::string manifest = config.render();
  manifest += "\n# resolved output checksums (fnv1a64)\n";
  for (const auto& [name, contents] : out.files) {
    write_text_file(out_dir + "/" + name, contents);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a(contents)));
    manifest += "# checksum " + name + " = " + buf + "\n";
  }
  for (const auto& w : out.warnings) manifest += "# warning: " + w + "\n";
  write_text_file(out_dir + "/manifest.txt", manifest);
}

}  // namespace afc
