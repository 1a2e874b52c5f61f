#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "gevlab/kernels.hpp"
#include "gevlab/rng.hpp"

using namespace gevlab;

namespace {
std::vector<double> make_noise(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform(-1.0, 1.0);
  return v;
}
}  // namespace

TEST_CASE("chunked sum agrees with the serial reference") {
  auto v = make_noise(100000, 1);
  auto term = [&](std::int64_t i) { return v[static_cast<std::size_t>(i)] * 1.000001; };
  const double serial = kernels::serial_sum(static_cast<std::int64_t>(v.size()), term);
  const double chunked = kernels::chunked_sum(static_cast<std::int64_t>(v.size()), term);
  CHECK(chunked == doctest::Approx(serial).epsilon(1e-12));
}

TEST_CASE("chunked sum is independent of the execution mode") {
  auto v = make_noise(37777, 2);
  auto term = [&](std::int64_t i) { return v[static_cast<std::size_t>(i)]; };
  kernels::set_parallel(true);
  const double par = kernels::chunked_sum(static_cast<std::int64_t>(v.size()), term);
  kernels::set_parallel(false);
  const double ser = kernels::chunked_sum(static_cast<std::int64_t>(v.size()), term);
  kernels::set_parallel(true);
  CHECK(par == ser);  // bitwise: the chunk partition is fixed
}

TEST_CASE("grid max") {
  auto v = make_noise(5000, 3);
  v[1234] = -7.5;
  CHECK(kernels::grid_max_abs(v) == 7.5);
  CHECK(kernels::grid_max_abs(v) == kernels::grid_max_abs_serial(v));
}

TEST_CASE("advection contraction matches serial") {
  const std::size_t n = 4096;
  auto u1 = make_noise(n, 4), u2 = make_noise(n, 5), wx = make_noise(n, 6), wy = make_noise(n, 7);
  std::vector<double> a(n), b(n);
  kernels::advection_contract(u1, u2, wx, wy, a);
  kernels::advection_contract_serial(u1, u2, wx, wy, b);
  CHECK(a == b);
}
