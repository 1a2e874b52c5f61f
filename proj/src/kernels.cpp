#include "gevlab/kernels.hpp"

#include <atomic>

namespace gevlab::kernels {

namespace {
std::atomic<bool> g_parallel{true};
}

bool parallel_enabled() { return g_parallel.load(std::memory_order_relaxed); }
void set_parallel(bool on) { g_parallel.store(on, std::memory_order_relaxed); }

namespace detail {

double run_chunked_sum(std::int64_t n, double* partials, void* ctx,
                       double (*chunk_fn)(void*, std::int64_t, std::int64_t)) {
  const int chunks = static_cast<int>(std::min<std::int64_t>(n, kReductionChunks));
  if (parallel_enabled()) {
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < chunks; ++c) {
      std::int64_t lo = n * c / chunks;
      std::int64_t hi = n * (c + 1) / chunks;
      partials[c] = chunk_fn(ctx, lo, hi);
    }
  } else {
    for (int c = 0; c < chunks; ++c) {
      std::int64_t lo = n * c / chunks;
      std::int64_t hi = n * (c + 1) / chunks;
      partials[c] = chunk_fn(ctx, lo, hi);
    }
  }
  double s = 0.0, comp = 0.0;
  for (int c = 0; c < chunks; ++c) {
    double y = partials[c] - comp;
    double t = s + y;
    comp = (t - s) - y;
    s = t;
  }
  return s;
}

}  // namespace detail

double grid_max_abs(std::span<const double> v) {
  return parallel_max(static_cast<std::int64_t>(v.size()),
                      [&](std::int64_t i) { return std::abs(v[static_cast<std::size_t>(i)]); });
}

double grid_max_abs_serial(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

void advection_contract(std::span<const double> u1, std::span<const double> u2,
                        std::span<const double> wx, std::span<const double> wy,
                        std::span<double> out) {
  const std::int64_t n = static_cast<std::int64_t>(out.size());
  if (!parallel_enabled() || n < kSerialCutoff) {
    advection_contract_serial(u1, u2, wx, wy, out);
    return;
  }
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    auto k = static_cast<std::size_t>(i);
    out[k] = -(u1[k] * wx[k] + u2[k] * wy[k]);
  }
}

void advection_contract_serial(std::span<const double> u1, std::span<const double> u2,
                               std::span<const double> wx, std::span<const double> wy,
                               std::span<double> out) {
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = -(u1[k] * wx[k] + u2[k] * wy[k]);
}

void gradient_trace_contract(const std::array<std::span<const double>, 9>& g, std::span<double> out) {
  const std::int64_t n = static_cast<std::int64_t>(out.size());
  const bool par = parallel_enabled() && n >= kSerialCutoff;
#pragma omp parallel for schedule(static) if (par)
  for (std::int64_t idx = 0; idx < n; ++idx) {
    auto k = static_cast<std::size_t>(idx);
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        s += g[static_cast<std::size_t>(3 * i + j)][k] * g[static_cast<std::size_t>(3 * j + i)][k];
    out[k] = s;
  }
}

}  // namespace gevlab::kernels
