#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "afc/config.hpp"
#include "afc/csv.hpp"
#include "afc/errors.hpp"
#include "afc/experiments.hpp"
#include "afc/metrics.hpp"
#include "afc/special.hpp"

using namespace afc;

namespace {

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string* header = nullptr) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (header) *header = line;
      continue;
    }
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

const std::string& file_contents(const RunOutput& out, const std::string& name) {
  for (const auto& [n, c] : out.files)
    if (n == name) return c;
  throw std::runtime_error("missing output " + name);
}

}  // namespace

TEST_CASE("config template parses back to defaults and render round-trips") {
  auto c = ExperimentConfig::parse_text(ExperimentConfig::template_text());
  CHECK(c.experiment == "fig2");
  CHECK(c.delta == 0.1);
  auto c2 = ExperimentConfig::parse_text(c.render());
  CHECK(c2.render() == c.render());
}

TEST_CASE("config errors carry line numbers; unknown keys rejected") {
  try {
    ExperimentConfig::parse_text("[comb]\ndelta=0.1\nbogus_key=3\n");
    CHECK(false);
  } catch (const ConfigError& e) {
    CHECK(e.line == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(ExperimentConfig::parse_text("[medium]\nd0=banana\n"), ConfigError);
  CHECK_THROWS_AS(ExperimentConfig::parse_text("[experiment]\nid=nope\n"), ConfigError);
  // invariant violations are config errors too
  CHECK_THROWS_AS(ExperimentConfig::parse_text("[comb]\nb=0.2\ndelta=0.1\n"), ConfigError);
}

TEST_CASE("csv format: hash header and 12 significant digits") {
  CsvWriter w({"a", "b"});
  w.add_row({1.0 / 3.0, 6.02214076e23});
  const std::string s = w.str();
  CHECK(s.rfind("# a,b\n", 0) == 0);
  CHECK(s.find("0.333333333333") != std::string::npos);
  CHECK(s.find("6.02214076e+23") != std::string::npos);
  CHECK_THROWS_AS(w.add_row({1.0}), InputError);
}

TEST_CASE("fig2 run: narrowband limit, frozen spot value, cross-validation") {
  ExperimentConfig c;
  c.experiment = "fig2";
  c.d0 = std::numeric_limits<double>::infinity();
  c.deltap_sweep = {0.05, 0.2, 0.3, 0.5, 0.7};
  c.grid_halfwidth = 6.0;
  c.grid_n = 48001;
  auto out = run_experiment(c, 1);
  auto rows = parse_csv(file_contents(out, "fig2.csv"));
  REQUIRE(rows.size() == 5);

  const double kap2 = std::exp(-2.0 * M_PI * M_PI / (kZeta * 100.0));  // finesse 10 comb
  // y = 0.05 row: both columns near kappa^2
  CHECK(rows[0][1] == doctest::Approx(kap2).epsilon(0.01));
  CHECK(rows[0][2] == doctest::Approx(kap2).epsilon(0.01));
  // y = 0.5 row: Eq. 22 column at its frozen value
  CHECK(rows[3][1] == doctest::Approx(0.86419411 * kap2).epsilon(1e-6));
  // columns agree within 0.03 for all y <= 0.7
  for (const auto& r : rows) CHECK(std::abs(r[1] - r[2]) < 0.03);
}

TEST_CASE("dispersion run: odd columns, row-wise sum, sign opposition") {
  ExperimentConfig c;
  c.experiment = "dispersion";
  auto out = run_experiment(c, 1);
  auto rows = parse_csv(file_contents(out, "dispersion.csv"));
  REQUIRE(!rows.empty());
  bool saw_zero = false;
  for (const auto& r : rows) {
    // exact in the doubles; the CSV's 12-significant-digit rounding of each
    // column independently leaves ~1e-12 relative slack after re-parsing
    CHECK(std::abs(r[1] + r[2] - r[3]) <= 2e-12 * std::max(1.0, std::abs(r[3])));
    if (r[0] == 0.0) {
      saw_zero = true;
      CHECK(r[1] == 0.0);
      CHECK(r[2] == 0.0);
      CHECK(r[3] == 0.0);
    }
    if (r[0] > 0.0 && r[0] < 0.45) {
      CHECK(r[1] < 0.0);  // AFC: fast light
      CHECK(r[2] > 0.0);  // side lines: slow light
    }
    if (std::abs(r[0] - 0.3) < 1e-9) {
      CHECK(std::abs(r[3]) < 0.02);
      CHECK(std::abs(r[1]) > 0.2);
    }
  }
  CHECK(saw_zero);
}

TEST_CASE("mismatch run: unit weights at center, MAFC near unity at 0.4") {
  ExperimentConfig c;
  c.experiment = "mismatch";
  auto out = run_experiment(c, 1);
  auto rows = parse_csv(file_contents(out, "mismatch.csv"));
  for (const auto& r : rows) {
    CHECK(r[1] > 0.0);
    CHECK(r[1] <= 1.0);
    CHECK(r[2] > 0.0);
    CHECK(r[2] <= 1.0);
    if (r[0] == 0.0) {
      CHECK(r[1] == 1.0);
      CHECK(r[2] == 1.0);
    }
    if (std::abs(r[0] - 0.4) < 1e-9) {
      CHECK(r[2] >= 0.99);
      CHECK(r[1] < 0.8);
    }
  }
}

TEST_CASE("qecurve run: limits, ordering, monotone decrease") {
  ExperimentConfig c;
  c.experiment = "qecurve";
  c.d0 = std::numeric_limits<double>::infinity();
  c.b = 1e-5;  // kappa ~ 1
  c.delta = 1e-3;
  c.deltap_sweep = {0.05, 0.2, 0.35, 0.5, 0.65};
  c.grid_halfwidth = 4.0;
  c.grid_n = 32001;
  auto out = run_experiment(c, 2);  // exercise the worker pool
  auto rows = parse_csv(file_contents(out, "qecurve.csv"));
  REQUIRE(rows.size() == 5);

  // narrowband: all three approach kappa^2 (~1 at finesse 100)
  const double kap2 = std::exp(-2.0 * M_PI * M_PI / (kZeta * 1e4));
  CHECK(rows[0][1] == doctest::Approx(kap2).epsilon(0.01));
  CHECK(rows[0][2] == doctest::Approx(kap2).epsilon(0.01));
  CHECK(rows[0][3] == doctest::Approx(kap2).epsilon(0.01));
  for (const auto& r : rows) {
    CHECK(r[2] >= r[1]);      // MAFC >= AFC
    CHECK(r[3] + 1e-9 >= r[2]);  // ideal is the ceiling
  }
  // monotone non-increasing columns
  for (size_t i = 1; i < rows.size(); ++i) {
    for (int col : {1, 2, 3}) CHECK(rows[i][col] <= rows[i - 1][col] + 1e-12);
  }
  // Fig. 6 spot: dp = 0.5 row
  CHECK(rows[3][3] == doctest::Approx(0.981468 * kap2).epsilon(1e-5));
  CHECK(rows[3][3] - rows[3][2] < 0.02);
  CHECK(rows[3][2] - rows[3][1] >= 0.03);
}

TEST_CASE("thread count does not change sweep bytes") {
  ExperimentConfig c;
  c.experiment = "qecurve";
  c.deltap_sweep = {0.1, 0.3, 0.5, 0.7, 0.9};
  c.grid_n = 4001;
  auto a = run_experiment(c, 1);
  auto b = run_experiment(c, 3);
  CHECK(file_contents(a, "qecurve.csv") == file_contents(b, "qecurve.csv"));
}

TEST_CASE("echo run: vacuum-free sanity plus energy consistency with metrics") {
  ExperimentConfig c;
  c.experiment = "echo";
  c.d0 = 2.0;
  c.deltap = 0.5;
  c.dt = 0.05;
  c.n_teeth_half = 12;
  c.bins_per_b = 6;
  c.n_z = 150;
  auto out = run_experiment(c, 1);
  auto rows = parse_csv(file_contents(out, "echo.csv"));
  REQUIRE(!rows.empty());
  auto erows = parse_csv(file_contents(out, "echo_energy.csv"));
  REQUIRE(erows.size() == 1);
  const double ratio = erows[0][4];

  // retrieved/input equals the closed-form Q within 2%
  auto grid = DetuningGrid::symmetric(4.0, 16001);
  auto t = make_transfer(gaussian_response(grid, c.d0),
                         tooth_transform(LineShape::gaussian(c.b), 2 * M_PI / c.delta));
  const double q = quantum_efficiency(t, SignalSpec::gaussian(grid, c.deltap));
  CHECK(ratio == doctest::Approx(q).epsilon(0.02));

  // retrieved peak sits at the 2pi/delta-consistent bin (group advance included)
  double tpk = 0.0, best = 0.0;
  for (const auto& r : rows) {
    if (r[9] > best) {
      best = r[9];
      tpk = r[0];
    }
  }
  CHECK(std::abs(tpk - 2 * M_PI / c.delta) < 2.0);
}

TEST_CASE("custom run emits the comb profile with envelope-topped teeth") {
  ExperimentConfig c;
  c.experiment = "custom";
  c.grid_n = 2001;
  c.deltap_sweep = {0.3};
  auto out = run_experiment(c, 1);
  auto rows = parse_csv(file_contents(out, "profile.csv"));
  REQUIRE(rows.size() > 100);
  // tooth top at zero detuning matches the envelope peak within 1%
  double at0 = 0.0, best = 1.0;
  for (const auto& r : rows) {
    if (std::abs(r[0]) < best) {
      best = std::abs(r[0]);
      at0 = r[1];
    }
  }
  CHECK(at0 == doctest::Approx(std::sqrt(kZeta / M_PI)).epsilon(0.01));
}

TEST_CASE("manifest re-run reproduces every byte") {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "afc_cli_test";
  fs::remove_all(dir);

  ExperimentConfig c;
  c.experiment = "mismatch";
  c.out_dir = dir.string();
  auto out = run_experiment(c, 1);
  write_outputs(out, c, c.out_dir);

  auto c2 = ExperimentConfig::parse_file((dir / "manifest.txt").string());
  auto out2 = run_experiment(c2, 1);
  CHECK(file_contents(out2, "mismatch.csv") == file_contents(out, "mismatch.csv"));

  std::ifstream f(dir / "mismatch.csv", std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == file_contents(out, "mismatch.csv"));
  fs::remove_all(dir);
}
