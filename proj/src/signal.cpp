#include "afc/signal.hpp"

#include <cmath>

#include "afc/errors.hpp"
#include "afc/special.hpp"

namespace afc {

double SignalSpec::norm2() const {
  const double h = grid.spacing();
  double s = 0.0;
  for (int i = 0; i + 1 < grid.size(); ++i)
    s += 0.5 * (std::norm(amplitude[i]) + std::norm(amplitude[i + 1]));
  return s * h;
}

SignalSpec SignalSpec::gaussian(const DetuningGrid& grid, double delta_p, double w0) {
  if (!(delta_p > 0)) throw InputError("signal bandwidth must be positive");
  SignalSpec s;
  s.grid = grid;
  s.delta_p = delta_p;
  s.amplitude.resize(grid.size());
  const double norm = std::pow(kZeta / M_PI, 0.25) / std::sqrt(delta_p);
  for (int i = 0; i < grid.size(); ++i) {
    const double w = grid.at(i) - w0;
    s.amplitude[i] = norm * std::exp(-0.5 * kZeta * w * w / (delta_p * delta_p));
  }
  // Trapezoid renormalization absorbs the grid truncation of the tails.
  const double n2 = s.norm2();
  if (n2 <= 0) throw InputError("signal has no support on the grid");
  const double c = 1.0 / std::sqrt(n2);
  for (auto& a : s.amplitude) a *= c;
  return s;
}

SignalSpec SignalSpec::from_samples(const DetuningGrid& grid,
                                    std::vector<std::complex<double>> amplitude, double delta_p) {
  if (static_cast<int>(amplitude.size()) != grid.size())
    throw InputError("amplitude sample count does not match grid");
  SignalSpec s;
  s.grid = grid;
  s.delta_p = delta_p;
  s.amplitude = std::move(amplitude);
  const double n2 = s.norm2();
  if (n2 <= 0) throw InputError("signal has zero energy");
  const double c = 1.0 / std::sqrt(n2);
  for (auto& a : s.amplitude) a *= c;
  return s;
}

}  // namespace afc
