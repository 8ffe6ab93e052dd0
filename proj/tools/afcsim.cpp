// Command-line driver: reproduces the memory-design figures (fig2,
// dispersion, mismatch, qecurve, echo) and custom sweeps as CSV, from a flat
// key=value config. Every run writes a manifest that reproduces it bitwise.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "afc/errors.hpp"
#include "afc/experiments.hpp"

int main(int argc, char** argv) {
  CLI::App app{"atomic-frequency-comb memory designer"};

  std::string config_path;
  std::string out_dir;
  bool strict = false;
  bool emit_template = false;
  int threads = 1;

  app.add_option("--config", config_path, "experiment config file");
  app.add_option("--out", out_dir, "output directory (overrides [output] dir)");
  app.add_flag("--strict", strict, "escalate design warnings to exit code 4");
  app.add_option("--threads", threads, "worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_flag("--emit-template", emit_template, "print a documented config template and exit");

  CLI11_PARSE(app, argc, argv);

  if (emit_template) {
    std::cout << afc::ExperimentConfig::template_text();
    return 0;
  }
  if (config_path.empty()) {
    std::cerr << "error: --config is required (or --emit-template)\n";
    return 2;
  }

  try {
    afc::ExperimentConfig config = afc::ExperimentConfig::parse_file(config_path);
    if (!out_dir.empty()) config.out_dir = out_dir;

    afc::RunOutput out = afc::run_experiment(config, threads);
    afc::write_outputs(out, config, config.out_dir);

    for (const auto& w : out.warnings) std::cerr << "warning: " << w << "\n";
    for (const auto& [name, contents] : out.files)
      std::cout << config.out_dir << "/" << name << "\n";
    if (strict && !out.warnings.empty()) return 4;
    return 0;
  } catch (const afc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const afc::InputError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
