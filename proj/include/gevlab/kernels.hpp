#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <type_traits>
#include <vector>

namespace gevlab::kernels {

/// Global switch between the OpenMP kernels and the serial reference path.
/// Results are identical either way: reductions run over a fixed chunk
/// partition whose partials are combined in chunk order, so the value does
/// not depend on the thread count.
bool parallel_enabled();
void set_parallel(bool on);

inline constexpr int kReductionChunks = 256;
/// Element loops below this size run serially: fork/join overhead beats the
/// gain on small grids.
inline constexpr std::int64_t kSerialCutoff = 1 << 15;

namespace detail {
double run_chunked_sum(std::int64_t n, double* partials, void* ctx, double (*chunk_fn)(void*, std::int64_t, std::int64_t));
}

/// Deterministic chunked sum of term(i) for i in [0, n). Each chunk is
/// accumulated with Kahan compensation; chunk partials are combined in order.
template <class F>
double chunked_sum(std::int64_t n, F&& term) {
  if (n <= 0) return 0.0;
  if (n < kSerialCutoff) {
    double s = 0.0, comp = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
      double y = term(i) - comp;
      double t = s + y;
      comp = (t - s) - y;
      s = t;
    }
    return s;
  }
  using Fn = std::remove_reference_t<F>;
  struct Ctx {
    Fn* f;
  } ctx{std::addressof(term)};
  auto chunk_fn = [](void* c, std::int64_t lo, std::int64_t hi) -> double {
    Fn& f = *static_cast<Ctx*>(c)->f;
    double s = 0.0, comp = 0.0;
    for (std::int64_t i = lo; i < hi; ++i) {
      double y = f(i) - comp;
      double t = s + y;
      comp = (t - s) - y;
      s = t;
    }
    return s;
  };
  double partials[kReductionChunks];
  return detail::run_chunked_sum(n, partials, &ctx, chunk_fn);
}

/// Plain left-to-right sum; the reference the chunked kernel is tested against.
template <class F>
double serial_sum(std::int64_t n, F&& term) {
  double s = 0.0;
  for (std::int64_t i = 0; i < n; ++i) s += term(i);
  return s;
}

/// Deterministic max of term(i) over [0, n). Max is order-independent, so a
/// straightforward parallel reduction is safe.
template <class F>
double parallel_max(std::int64_t n, F&& term) {
  double best = -std::numeric_limits<double>::infinity();
  if (parallel_enabled() && n >= kSerialCutoff) {
#pragma omp parallel
    {
      double local = -std::numeric_limits<double>::infinity();
#pragma omp for schedule(static) nowait
      for (std::int64_t i = 0; i < n; ++i) local = std::max(local, term(i));
#pragma omp critical(gevlab_parallel_max)
      best = std::max(best, local);
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) best = std::max(best, term(i));
  }
  return best;
}

/// Runs body(i) for i in [0, n), in parallel when enabled. Bodies must write
/// to disjoint slots; iteration order is unspecified.
template <class F>
void parallel_for(std::int64_t n, F&& body) {
  if (parallel_enabled()) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) body(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) body(i);
  }
}

double grid_max_abs(std::span<const double> v);
double grid_max_abs_serial(std::span<const double> v);

/// out = -(u1*wx + u2*wy), the advection contraction on grid values.
void advection_contract(std::span<const double> u1, std::span<const double> u2,
                        std::span<const double> wx, std::span<const double> wy,
                        std::span<double> out);
void advection_contract_serial(std::span<const double> u1, std::span<const double> u2,
                               std::span<const double> wx, std::span<const double> wy,
                               std::span<double> out);

/// out = sum_{i,j} g[i][j]*g[j][i] for a 3x3 array of gradient grids.
void gradient_trace_contract(const std::array<std::span<const double>, 9>& g, std::span<double> out);

}  // namespace gevlab::kernels
