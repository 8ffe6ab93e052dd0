#include "afc/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "afc/csv.hpp"
#include "afc/errors.hpp"

namespace afc {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& v, int line) {
  if (v == "inf") return std::numeric_limits<double>::infinity();
  try {
    size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return x;
  } catch (...) {
    throw ConfigError("bad numeric value '" + v + "'", line);
  }
}

int parse_int(const std::string& v, int line) {
  try {
    size_t pos = 0;
    const int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return x;
  } catch (...) {
    throw ConfigError("bad integer value '" + v + "'", line);
  }
}

std::vector<double> parse_list(const std::string& v, int line) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_double(item, line));
  }
  return out;
}

}  // namespace

ExperimentConfig ExperimentConfig::parse_text(const std::string& text) {
  ExperimentConfig c;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("unterminated section header", line_no);
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key=value", line_no);
    const std::string key = section + "." + trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));

    if (key == "experiment.id") c.experiment = val;
    else if (key == "comb.envelope_kind") c.envelope_kind = val;
    else if (key == "comb.envelope_width") c.envelope_width = parse_double(val, line_no);
    else if (key == "comb.delta") c.delta = parse_double(val, line_no);
    else if (key == "comb.b") c.b = parse_double(val, line_no);
    else if (key == "medium.d0") c.d0 = parse_double(val, line_no);
    else if (key == "mafc.design") {
      if (val == "auto") c.mafc_auto = true;
      else if (val == "manual") c.mafc_auto = false;
      else throw ConfigError("mafc design must be auto or manual", line_no);
    } else if (key == "mafc.delta_o") c.delta_o = parse_double(val, line_no);
    else if (key == "mafc.fs_strength") c.fs_strength = parse_double(val, line_no);
    else if (key == "mafc.omega") c.omega = parse_double(val, line_no);
    else if (key == "signal.deltap") c.deltap = parse_double(val, line_no);
    else if (key == "signal.deltap_sweep") c.deltap_sweep = parse_list(val, line_no);
    else if (key == "signal.sweep_points") c.sweep_points = parse_int(val, line_no);
    else if (key == "signal.sweep_min") c.sweep_min = parse_double(val, line_no);
    else if (key == "signal.sweep_max") c.sweep_max = parse_double(val, line_no);
    else if (key == "grid.halfwidth") c.grid_halfwidth = parse_double(val, line_no);
    else if (key == "grid.n") c.grid_n = parse_int(val, line_no);
    else if (key == "oracle.n_teeth_half") c.n_teeth_half = parse_int(val, line_no);
    else if (key == "oracle.bins_per_b") c.bins_per_b = parse_int(val, line_no);
    else if (key == "oracle.n_z") c.n_z = parse_int(val, line_no);
    else if (key == "oracle.dt") c.dt = parse_double(val, line_no);
    else if (key == "oracle.t_switch") c.t_switch = parse_double(val, line_no);
    else if (key == "output.dir") c.out_dir = val;
    else throw ConfigError("unknown key '" + key + "'", line_no);
  }
  c.validate();
  return c;
}

ExperimentConfig ExperimentConfig::parse_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_text(ss.str());
}

void ExperimentConfig::validate() const {
  static const char* ids[] = {"fig2", "dispersion", "mismatch", "qecurve", "echo", "custom"};
  bool ok = false;
  for (const char* id : ids) ok = ok || experiment == id;
  if (!ok) throw ConfigError("unknown experiment id '" + experiment + "'");
  if (envelope_kind != "gaussian" && envelope_kind != "rectangular")
    throw ConfigError("envelope_kind must be gaussian or rectangular");
  if (!(envelope_width > 0) || !(delta > 0) || !(b > 0))
    throw ConfigError("comb widths must be positive");
  if (!(b < delta) || !(delta < envelope_width))
    throw ConfigError("comb requires b < delta < envelope_width");
  if (!(d0 > 0)) throw ConfigError("d0 must be positive");
  if (!(deltap > 0)) throw ConfigError("signal bandwidth must be positive");
  if (sweep_points < 2) throw ConfigError("sweep needs at least 2 points");
  if (!(sweep_min > 0 && sweep_max > sweep_min)) throw ConfigError("bad sweep range");
  if (grid_n < 16) throw ConfigError("grid too small");
  if (!(grid_halfwidth > 0)) throw ConfigError("grid halfwidth must be positive");
  if (n_teeth_half < 1 || bins_per_b < 5 || n_z < 100)
    throw ConfigError("oracle resolution below minimum (bins_per_b >= 5, n_z >= 100)");
  if (!(dt > 0)) throw ConfigError("dt must be positive");
}

std::string ExperimentConfig::render() const {
  std::ostringstream o;
  o << "[experiment]\nid=" << experiment << "\n\n";
  o << "[comb]\nenvelope_kind=" << envelope_kind
    << "\nenvelope_width=" << format_g12(envelope_width) << "\ndelta=" << format_g12(delta)
    << "\nb=" << format_g12(b) << "\n\n";
  o << "[medium]\nd0=" << (std::isinf(d0) ? "inf" : format_g12(d0)) << "\n\n";
  o << "[mafc]\ndesign=" << (mafc_auto ? "auto" : "manual")
    << "\ndelta_o=" << format_g12(delta_o) << "\nfs_strength=" << format_g12(fs_strength)
    << "\nomega=" << format_g12(omega) << "\n\n";
  o << "[signal]\ndeltap=" << format_g12(deltap);
  if (!deltap_sweep.empty()) {
    o << "\ndeltap_sweep=";
    for (size_t i = 0; i < deltap_sweep.size(); ++i)
      o << (i ? "," : "") << format_g12(deltap_sweep[i]);
  }
  o << "\nsweep_points=" << sweep_points << "\nsweep_min=" << format_g12(sweep_min)
    << "\nsweep_max=" << format_g12(sweep_max) << "\n\n";
  o << "[grid]\nhalfwidth=" << format_g12(grid_halfwidth) << "\nn=" << grid_n << "\n\n";
  o << "[oracle]\nn_teeth_half=" << n_teeth_half << "\nbins_per_b=" << bins_per_b
    << "\nn_z=" << n_z << "\ndt=" << format_g12(dt) << "\nt_switch=" << format_g12(t_switch)
    << "\n\n";
  o << "[output]\ndir=" << out_dir << "\n";
  return o.str();
}

std::string ExperimentConfig::template_text() {
  return
      "# Experiment configuration. Values shown are the defaults.\n"
      "# Frequencies are in units of the AFC envelope width, time in its inverse.\n"
      "\n"
      "[experiment]\n"
      "# one of: fig2 | dispersion | mismatch | qecurve | echo | custom\n"
      "id=fig2\n"
      "\n"
      "[comb]\n"
      "envelope_kind=gaussian   # gaussian | rectangular\n"
      "envelope_width=1\n"
      "delta=0.1                # tooth spacing\n"
      "b=0.01                   # tooth width (finesse = delta/b)\n"
      "\n"
      "[medium]\n"
      "d0=5                     # peak optical depth; 'inf' for the deep limit\n"
      "\n"
      "[mafc]\n"
      "design=auto              # auto = analytic compensation point; manual uses the values below\n"
      "delta_o=1.7320508075688772\n"
      "fs_strength=1.5\n"
      "omega=0.01\n"
      "\n"
      "[signal]\n"
      "deltap=0.3               # signal intensity FWHM (echo/custom)\n"
      "#deltap_sweep=0.1,0.2,0.3  # explicit sweep grid (fig2/qecurve); overrides the range below\n"
      "sweep_points=25\n"
      "sweep_min=0.05\n"
      "sweep_max=0.9\n"
      "\n"
      "[grid]\n"
      "halfwidth=4              # spectral grid half width\n"
      "n=8193                   # spectral samples\n"
      "\n"
      "[oracle]\n"
      "n_teeth_half=15          # comb teeth: 2*n+1\n"
      "bins_per_b=8             # detuning bins per tooth width\n"
      "n_z=200                  # depth slabs\n"
      "dt=0.04                  # time step\n"
      "t_switch=14              # backward switch time (echo)\n"
      "\n"
      "[output]\n"
      "dir=.\n";
}

}  // namespace afc
