// Timing comparison of the OpenMP kernels against the serial reference:
// weighted modal sums, grid reductions, seminorm tables, Euler steps, and
// the star-sum scan.

#include <chrono>
#include <cstdio>
#include <vector>

#include "gevlab/flows.hpp"
#include "gevlab/kernels.hpp"
#include "gevlab/lemmas.hpp"
#include "gevlab/random_field.hpp"
#include "gevlab/rng.hpp"
#include "gevlab/seminorms.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace gevlab;
using clk = std::chrono::steady_clock;

namespace {

template <class F>
double time_of(F&& fn, int reps = 3) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = clk::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(clk::now() - t0).count());
  }
  return best;
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-28s serial %8.3f ms   omp %8.3f ms   speedup %.2fx\n", name, serial * 1e3,
              parallel * 1e3, serial / parallel);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#endif

  {  // chunked weighted sum on a large array
    Rng rng(1);
    std::vector<double> v(1 << 22);
    for (auto& x : v) x = rng.uniform(-1, 1);
    auto body = [&] {
      return kernels::chunked_sum(static_cast<std::int64_t>(v.size()), [&](std::int64_t i) {
        const double x = v[static_cast<std::size_t>(i)];
        return x * x * 1.000001;
      });
    };
    kernels::set_parallel(false);
    const double ts = time_of([&] { (void)body(); });
    kernels::set_parallel(true);
    const double tp = time_of([&] { (void)body(); });
    report("weighted sum (4M)", ts, tp);
  }

  {  // grid max
    Rng rng(2);
    std::vector<double> v(1 << 22);
    for (auto& x : v) x = rng.uniform(-1, 1);
    kernels::set_parallel(false);
    const double ts = time_of([&] { (void)kernels::grid_max_abs(v); });
    kernels::set_parallel(true);
    const double tp = time_of([&] { (void)kernels::grid_max_abs(v); });
    report("grid max (4M)", ts, tp);
  }

  {  // seminorm table at 64^3-band scale
    auto u = random_periodic_scalar(3, Domain::Periodic3D, 16, 0.3);
    kernels::set_parallel(false);
    const double ts = time_of([&] { (void)seminorm_table(u, 10, 1.0); }, 2);
    kernels::set_parallel(true);
    const double tp = time_of([&] { (void)seminorm_table(u, 10, 1.0); }, 2);
    report("seminorm table m<=10", ts, tp);
  }

  {  // Euler steps at 256^2
    auto run = [&] {
      flows::Euler2D solver(256);
      solver.set_vorticity(random_vorticity_2d(4, 40, 0.4));
      for (int i = 0; i < 10; ++i) solver.step(1e-3);
    };
    kernels::set_parallel(false);
    const double ts = time_of(run, 2);
    kernels::set_parallel(true);
    const double tp = time_of(run, 2);
    report("euler 256^2 x10 steps", ts, tp);
  }

  {  // star-sum scan
    kernels::set_parallel(false);
    const double ts = time_of([&] { (void)lemmas::star_sup(120, lemmas::StarVariant::Plain); }, 2);
    kernels::set_parallel(true);
    const double tp = time_of([&] { (void)lemmas::star_sup(120, lemmas::StarVariant::Plain); }, 2);
    report("star sup range 120", ts, tp);
  }

  return 0;
}
