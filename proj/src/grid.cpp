#include "afc/grid.hpp"

#include <cmath>

#include "afc/errors.hpp"

namespace afc {

DetuningGrid::DetuningGrid(double lo_, double hi_, int n_) : lo(lo_), hi(hi_), n(n_) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw InputError("grid bounds must be finite");
  if (n < 2) throw InputError("grid needs at least two samples");
  if (hi <= lo) throw InputError("grid bounds must be increasing");
}

DetuningGrid DetuningGrid::symmetric(double half_width, int n) {
  if (!(half_width > 0)) throw InputError("grid half width must be positive");
  return DetuningGrid(-half_width, half_width, n);
}

std::vector<double> DetuningGrid::points() const {
  std::vector<double> p(n);
  for (int i = 0; i < n; ++i) p[i] = at(i);
  return p;
}

int DetuningGrid::nearest_index(double w) const {
  if (!std::isfinite(w)) throw InputError("frequency must be finite");
  if (w < lo - 0.5 * spacing() || w > hi + 0.5 * spacing())
    throw InputError("frequency outside grid");
  int i = static_cast<int>(std::lround((w - at(0)) / spacing()));
  if (i < 0) i = 0;
  if (i >= n) i = n - 1;
  return i;
}

}  // namespace afc
