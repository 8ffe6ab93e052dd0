#pragma once

#include <stdexcept>
#include <string>

namespace afc {

// Bad argument values (non-finite inputs, domain violations).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A grid is too coarse for the requested construction.
struct ResolutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Frequency outside the medium's processing band.
struct OutOfBandError : std::domain_error {
  using std::domain_error::domain_error;
};

// Evaluation at a pole of a closed form.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

// Signal not adequately supported on the working grid.
struct CoverageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Time-domain sampling contract (window/resolution) violated.
struct SamplingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Time-stepping stability bound violated.
struct StabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Retrieval protocol timing violated (switch outside the allowed window).
struct ProtocolError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Metric undefined for the given inputs (zero energy, nothing retrieved).
struct UndefinedMetricError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Derivative-free search failed to converge; carries the best iterate.
struct OptimizationError : std::runtime_error {
  OptimizationError(const std::string& msg, double best_x0, double best_x1, double best_f)
      : std::runtime_error(msg), x0(best_x0), x1(best_x1), f(best_f) {}
  double x0, x1, f;
};

// Config file problems; line = 0 means "not tied to a specific line".
struct ConfigError : std::runtime_error {
  ConfigError(const std::string& msg, int line_no = 0)
      : std::runtime_error(line_no > 0 ? msg + " (line " + std::to_string(line_no) + ")" : msg),
        line(line_no) {}
  int line;
};

}  // namespace afc
