#pragma once

#include <complex>
#include <vector>

namespace afc {

// In-order complex DFT via FFTW (any length). sign = -1: X_k = sum_n x_n
// e^{-2pi i k n / N}; sign = +1 is the unnormalized inverse. Thread-safe.
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& x, int sign);

}  // namespace afc
