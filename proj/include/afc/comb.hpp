#pragma once

#include <string>
#include <vector>

#include "afc/grid.hpp"
#include "afc/line_shape.hpp"

namespace afc {

// Engraved comb geometry: envelope G, tooth shape kappa, tooth spacing delta.
// The paper's regime is b << delta << envelope width; construction enforces
// the strict ordering and warns when either ratio exceeds 0.2.
struct CombSpec {
  LineShape envelope = LineShape::gaussian(1.0);
  LineShape tooth = LineShape::gaussian(0.005);
  double spacing = 0.05;  // delta

  double tooth_width() const { return tooth.width; }
  double finesse() const { return spacing / tooth.width; }

  // Throws InputError on ordering violations; appends ratio warnings.
  void validate(std::vector<std::string>* warnings = nullptr) const;
};

struct SampledProfile {
  DetuningGrid grid;
  std::vector<double> values;
  std::string label;
};

// C(D) = [Sha(D/delta) (x) kappa(D)] G(D) / (kappa(0) delta), sampled on the
// grid. Teeth whose envelope weight falls below 1e-6 of the peak are dropped.
// The grid must resolve each tooth with at least 5 samples per width b.
SampledProfile build_comb(const CombSpec& spec, const DetuningGrid& grid);

// Sample any single line shape on a grid.
SampledProfile sample_shape(const LineShape& shape, const DetuningGrid& grid,
                            const std::string& label = "");

// Trapezoid integral of a sampled profile.
double profile_mass(const SampledProfile& p);

}  // namespace afc
