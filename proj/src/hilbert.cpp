#include "afc/hilbert.hpp"

#include <algorithm>
#include <cmath>

#include "afc/errors.hpp"

namespace afc {

namespace {

double derivative(const std::vector<double>& f, int i, double h) {
  const int n = static_cast<int>(f.size());
  if (i >= 3 && i + 3 < n) {
    return (f[i + 3] - f[i - 3] - 9.0 * (f[i + 2] - f[i - 2]) + 45.0 * (f[i + 1] - f[i - 1])) /
           (60.0 * h);
  }
  if (i >= 1 && i + 1 < n) return (f[i + 1] - f[i - 1]) / (2.0 * h);
  if (i == 0) return (f[1] - f[0]) / h;
  return (f[n - 1] - f[n - 2]) / h;
}

}  // namespace

HilbertResult pv_hilbert(const SampledProfile& profile) {
  const int n = profile.grid.size();
  const double h = profile.grid.spacing();
  const std::vector<double>& f = profile.values;

  HilbertResult out;
  out.values.assign(n, 0.0);

  const double peak = *std::max_element(f.begin(), f.end());
  if (peak > 0 && (f.front() > 1e-6 * peak || f.back() > 1e-6 * peak)) {
    out.warnings.push_back("profile has not decayed below 1e-6 of peak at grid edges; "
                           "dispersion tail is truncated");
  }

  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    const int kmax = std::max(i, n - 1 - i);
    for (int k = 1; k <= kmax; ++k) {
      const double fp = (i + k < n) ? f[i + k] : 0.0;
      const double fm = (i - k >= 0) ? f[i - k] : 0.0;
      s += (fp - fm) / k;
    }
    out.values[i] = -(derivative(f, i, h) * h + s) / M_PI;
  }
  return out;
}

}  // namespace afc
