#pragma once

#include <string>
#include <vector>

#include "afc/comb.hpp"

namespace afc {

struct HilbertResult {
  std::vector<double> values;  // D(w) on the profile grid
  std::vector<std::string> warnings;
};

// D(w) = (1/pi) P int profile(D)/(w - D) dD evaluated at every grid node.
//
// The kernel is antisymmetrized about the singular node: paired samples
// (f_{i+k} - f_{i-k}) / (k h) plus the analytic local term f'(w_i) for the
// singular bin, with f' from a sixth-order central stencil. Samples beyond
// the grid count as zero; a warning is attached when the profile has not
// decayed below 1e-6 of its peak at the edges.
HilbertResult pv_hilbert(const SampledProfile& profile);

}  // namespace afc
