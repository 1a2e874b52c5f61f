#include "gevlab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace gevlab::fft {

namespace {

std::mutex g_planner_mutex;
std::map<std::array<int, 4>, fftw_plan> g_plans;

fftw_plan plan_for(const std::array<int, 3>& n, int sign, cdouble* data) {
  std::lock_guard<std::mutex> lock(g_planner_mutex);
  std::array<int, 4> key{n[0], n[1], n[2], sign};
  auto it = g_plans.find(key);
  if (it != g_plans.end()) return it->second;
  // FFTW_UNALIGNED lets the cached plan run on any array via execute_dft.
  fftw_plan p = fftw_plan_dft_3d(n[0], n[1], n[2], reinterpret_cast<fftw_complex*>(data),
                                 reinterpret_cast<fftw_complex*>(data), sign,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
  g_plans.emplace(key, p);
  return p;
}

}  // namespace

void backward(const std::array<int, 3>& n, cdouble* data) {
  fftw_plan p = plan_for(n, FFTW_BACKWARD, data);
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(data), reinterpret_cast<fftw_complex*>(data));
}

void forward(const std::array<int, 3>& n, cdouble* data) {
  fftw_plan p = plan_for(n, FFTW_FORWARD, data);
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(data), reinterpret_cast<fftw_complex*>(data));
  const double scale = 1.0 / (static_cast<double>(n[0]) * n[1] * n[2]);
  const std::size_t total = static_cast<std::size_t>(n[0]) * n[1] * n[2];
  for (std::size_t i = 0; i < total; ++i) data[i] *= scale;
}

int good_size(int n) {
  if (n <= 1) return 1;
  for (int m = n;; ++m) {
    int r = m;
    for (int f : {2, 3, 5})
      while (r % f == 0) r /= f;
    if (r == 1) return m;
  }
}

}  // namespace gevlab::fft
