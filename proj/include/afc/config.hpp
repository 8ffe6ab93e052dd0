#pragma once

#include <map>
#include <string>
#include <vector>

namespace afc {

// Flat [section] key=value experiment description. Unknown keys are
// rejected with the offending line number; every default is documented in
// the generated template.
struct ExperimentConfig {
  std::string experiment = "fig2";  // fig2|dispersion|mismatch|qecurve|echo|custom

  // [comb]
  std::string envelope_kind = "gaussian";  // gaussian|rectangular
  double envelope_width = 1.0;
  double delta = 0.1;
  double b = 0.01;

  // [medium]
  double d0 = 5.0;  // "inf" accepted

  // [mafc]
  bool mafc_auto = true;  // delta_o = sqrt(3), fs = 3/2
  double delta_o = 1.7320508075688772;
  double fs_strength = 1.5;
  double omega = 0.01;

  // [signal]
  double deltap = 0.3;
  std::vector<double> deltap_sweep;  // qecurve/fig2 grids; empty -> built-in
  int sweep_points = 25;
  double sweep_min = 0.05;
  double sweep_max = 0.9;

  // [grid]
  double grid_halfwidth = 4.0;
  int grid_n = 8193;

  // [oracle]
  int n_teeth_half = 15;
  int bins_per_b = 8;
  int n_z = 200;
  double dt = 0.04;
  double t_switch = 14.0;

  // [output]
  std::string out_dir = ".";

  static ExperimentConfig parse_file(const std::string& path);
  static ExperimentConfig parse_text(const std::string& text);
  static std::string template_text();

  // Fully-resolved flat rendering; valid as a config file (the manifest).
  std::string render() const;

  void validate() const;
};

}  // namespace afc
