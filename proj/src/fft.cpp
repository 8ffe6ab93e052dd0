#include "afc/fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace afc {

namespace {
std::mutex planner_mutex;  // FFTW's planner is not thread-safe
}

std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& x, int sign) {
  const int n = static_cast<int>(x.size());
  std::vector<std::complex<double>> out(n);
  if (n == 0) return out;
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lk(planner_mutex);
    plan = fftw_plan_dft_1d(
        n, reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(x.data())),
        reinterpret_cast<fftw_complex*>(out.data()),
        sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lk(planner_mutex);
    fftw_destroy_plan(plan);
  }
  return out;
}

}  // namespace afc
