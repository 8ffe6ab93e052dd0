#pragma once

#include <vector>

namespace afc {

// Uniform detuning/frequency grid. All frequencies are dimensionless, in units
// of the envelope FWHM; time runs in units of its inverse.
struct DetuningGrid {
  double lo = -1.0;
  double hi = 1.0;
  int n = 2;

  DetuningGrid() = default;
  DetuningGrid(double lo_, double hi_, int n_);

  // lo = -hw .. hi = +hw; odd n lands a sample exactly on zero.
  static DetuningGrid symmetric(double half_width, int n);

  int size() const { return n; }
  double spacing() const { return (hi - lo) / (n - 1); }
  bool is_symmetric() const { return lo == -hi; }

  // Symmetric grids are evaluated about the midpoint so that at(i) == -at(n-1-i)
  // exactly, which downstream parity checks rely on.
  double at(int i) const {
    if (is_symmetric()) return (i - 0.5 * (n - 1)) * spacing();
    return lo + i * spacing();
  }

  std::vector<double> points() const;

  // Index of the sample nearest to w; throws if w is outside the grid.
  int nearest_index(double w) const;
};

}  // namespace afc
