#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "gevlab/radius.hpp"

using namespace gevlab;
using radius::RadiusParams;
using radius::Sample;
using radius::Trajectory;

namespace {
std::vector<Sample> uniform_samples(double t_final, double dt, double grad, double hr) {
  std::vector<Sample> s;
  const int n = static_cast<int>(std::llround(t_final / dt));
  for (int i = 0; i <= n; ++i) s.push_back({i * dt, grad, hr});
  return s;
}
}  // namespace

TEST_CASE("zero flow: G = 1, M = X0, tau constant") {
  RadiusParams p;
  p.tau0 = 0.8;
  p.u0_x = 3.0;
  Trajectory tr = radius::build_trajectory(uniform_samples(2.0, 0.1, 0.0, 0.0), p);
  for (double lg : tr.log_G) CHECK(lg == 0.0);
  for (double m : tr.M) CHECK(m == 3.0);

  // with u0 identically zero both decay terms vanish and tau is frozen
  RadiusParams pz;
  pz.tau0 = 0.8;
  Trajectory trz = radius::build_trajectory(uniform_samples(2.0, 0.1, 0.0, 0.0), pz);
  for (double t : trz.tau_ode) CHECK(t == doctest::Approx(0.8).epsilon(1e-14));
  // the closed form starts at tau0^{1/4}, not tau0
  CHECK(trz.tau_paper.front() == doctest::Approx(std::pow(0.8, 0.25)).epsilon(1e-14));
  for (double t : trz.tau_paper) CHECK(t == doctest::Approx(std::pow(0.8, 0.25)).epsilon(1e-14));
}

TEST_CASE("single sample gives G = 1") {
  RadiusParams p;
  Trajectory tr;
  tr.samples = {{0.0, 5.0, 2.0}};
  radius::accumulate(tr, p);
  CHECK(tr.log_G[0] == 0.0);
}

TEST_CASE("constant gradient: trapezoid reproduces the exponential exactly") {
  RadiusParams p;
  p.C = 1.3;
  const double g = 0.7;
  Trajectory tr;
  tr.samples = uniform_samples(3.0, 0.05, g, 0.0);
  radius::accumulate(tr, p);
  for (std::size_t i = 0; i < tr.samples.size(); ++i)
    CHECK(std::exp(tr.log_G[i]) == doctest::Approx(std::exp(p.C * g * tr.samples[i].t)).epsilon(1e-10));
}

TEST_CASE("non-monotone time is rejected") {
  RadiusParams p;
  Trajectory tr;
  tr.samples = {{0.0, 0, 0}, {0.5, 0, 0}, {0.5, 0, 0}};
  CHECK_THROWS_AS(radius::accumulate(tr, p), std::invalid_argument);
}

TEST_CASE("constant-coefficient ODE matches the Bernoulli closed form") {
  // tau' = -a tau - b tau^{3/2}: w = tau^{-1/2} gives w = (w0 + b/a)e^{at/2} - b/a
  RadiusParams p;
  p.C = 1.0;
  p.tau0 = 1.0;
  p.u0_x = 0.5;  // constant M = b (no hr accumulation)
  const double a = 0.8, b = 0.5;
  Trajectory tr = radius::build_trajectory(uniform_samples(5.0, 0.01, a, 0.0), p, 8);
  const double w = (1.0 + b / a) * std::exp(a * 5.0 / 2.0) - b / a;
  const double exact = 1.0 / (w * w);
  CHECK(std::abs(tr.tau_ode.back() - exact) / exact < 1e-8);
  CHECK(tr.cond2_residual_ode <= 1e-6);
}

TEST_CASE("a = 0: separable closed form") {
  RadiusParams p;
  p.C = 1.0;
  p.tau0 = 2.0;
  p.u0_x = 0.4;  // b
  Trajectory tr = radius::build_trajectory(uniform_samples(4.0, 0.01, 0.0, 0.0), p, 8);
  const double b = 0.4;
  const double exact = std::pow(std::pow(2.0, -0.5) + b * 4.0 / 2.0, -2.0);
  CHECK(std::abs(tr.tau_ode.back() - exact) / exact < 1e-8);
}

TEST_CASE("refinement convergence is fourth order") {
  RadiusParams p;
  p.u0_x = 0.3;
  // coefficients linear in t: the sample interpolation is exact, so halving
  // the spacing exposes the pure RK4 rate
  auto run = [&](double dt) {
    std::vector<Sample> s;
    const int n = static_cast<int>(std::llround(2.0 / dt));
    for (int i = 0; i <= n; ++i) {
      const double t = i * dt;
      s.push_back({t, 1.0 + 0.3 * t, 0.0});
    }
    return radius::build_trajectory(s, p, 1).tau_ode.back();
  };
  const double coarse = run(0.16);
  const double fine = run(0.08);
  const double finest = run(0.005);
  const double e1 = std::abs(coarse - finest);
  const double e2 = std::abs(fine - finest);
  CHECK(e2 < e1 / 12.0);  // ~16x for a fourth-order step
}

TEST_CASE("scale covariance of G") {
  const auto samples = uniform_samples(2.0, 0.1, 0.9, 0.0);
  RadiusParams p1;
  p1.C = 1.0;
  RadiusParams p2;
  p2.C = 2.0;
  auto half = samples;
  for (auto& s : half) s.grad_sup *= 0.5;
  Trajectory t1;
  t1.samples = samples;
  radius::accumulate(t1, p1);
  Trajectory t2;
  t2.samples = half;
  radius::accumulate(t2, p2);
  for (std::size_t i = 0; i < samples.size(); ++i) CHECK(t1.log_G[i] == t2.log_G[i]);
}

TEST_CASE("lower bound: zero flow, unit horizon") {
  RadiusParams p;
  p.tau0 = 1.0;
  Trajectory tr;
  tr.samples = uniform_samples(1.0, 0.25, 0.0, 0.0);
  radius::accumulate(tr, p);
  auto lb = radius::lower_bound_series(tr, p);
  CHECK(lb.C0 == doctest::Approx(1.0).epsilon(1e-14));
  for (std::size_t i = 0; i < tr.samples.size(); ++i)
    CHECK(lb.tau[i] == doctest::Approx(1.0 / (1.0 + tr.samples[i].t)).epsilon(1e-14));
}

TEST_CASE("lower bound scales exactly as G^{-1/2}") {
  RadiusParams p;
  p.u0_hr = 1.0;
  p.u0_x = 2.0;
  Trajectory tr = radius::build_trajectory(uniform_samples(2.0, 0.05, 1.5, 1.0), p);
  for (std::size_t i = 0; i < tr.samples.size(); ++i) {
    const double expected = std::exp(-0.5 * tr.log_G[i]) / (tr.C0 * (1 + tr.samples[i].t));
    CHECK(tr.tau_lower[i] == doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("series ordering on a growing trajectory") {
  RadiusParams p;
  p.tau0 = 1.0;
  p.u0_hr = 0.7;
  p.u0_x = 1.2;
  // norms grow compatibly with hr(t)^2 <= hr(0)^2 G(t)
  std::vector<Sample> s;
  for (int i = 0; i <= 200; ++i) {
    const double t = i * 0.02;
    s.push_back({t, 0.5 + 0.2 * t, 0.7 * std::exp(0.2 * t)});
  }
  Trajectory tr = radius::build_trajectory(s, p);
  for (std::size_t i = 0; i < s.size(); ++i) {
    // the closed-form display dominates the envelope (C0 >= 1 chain) and the
    // equality-form solution, which sheds radius at twice the display's rate
    CHECK(tr.tau_paper[i] >= tr.tau_lower[i] * (1 - 1e-12));
    CHECK(tr.tau_ode[i] <= tr.tau_paper[i] * (1 + 1e-12));
    CHECK(tr.tau_ode[i] > 0);
  }
  // tau_ode strictly decreasing while grad_sup > 0
  for (std::size_t i = 1; i < s.size(); ++i) CHECK(tr.tau_ode[i] < tr.tau_ode[i - 1]);
}

TEST_CASE("ode solution dominates the lower bound when the flow is quiet") {
  RadiusParams p;
  p.tau0 = 1.0;
  Trajectory tr = radius::build_trajectory(uniform_samples(3.0, 0.05, 0.0, 0.0), p);
  for (std::size_t i = 0; i < tr.samples.size(); ++i)
    CHECK(tr.tau_ode[i] >= tr.tau_lower[i] * (1 - 1e-12));
}

TEST_CASE("closed-form series is nonincreasing and misses condition 2 from above") {
  RadiusParams p;
  p.tau0 = 1.0;
  p.u0_x = 0.5;
  Trajectory tr = radius::build_trajectory(uniform_samples(5.0, 0.01, 0.8, 0.0), p, 8);
  for (std::size_t i = 1; i < tr.tau_paper.size(); ++i)
    CHECK(tr.tau_paper[i] <= tr.tau_paper[i - 1] * (1 + 1e-14));
  // the display sheds radius at half the rate the condition demands, so its
  // residual is positive (recorded, not asserted away)
  const double resid = radius::check_condition2(tr.tau_paper, tr, p);
  CHECK(resid > 0.0);
  CHECK(tr.cond2_residual_ode <= 1e-6);
}

TEST_CASE("condition-2 residual needs 3 samples") {
  RadiusParams p;
  Trajectory tr;
  tr.samples = uniform_samples(0.1, 0.1, 0.0, 0.0);  // 2 samples
  radius::accumulate(tr, p);
  std::vector<double> tau(tr.samples.size(), 1.0);
  CHECK_THROWS_AS((void)radius::check_condition2(tau, tr, p), std::invalid_argument);
}

TEST_CASE("trajectory csv round trip") {
  RadiusParams p;
  p.u0_x = 0.3;
  Trajectory tr = radius::build_trajectory(uniform_samples(1.0, 0.1, 0.4, 0.2), p);
  const std::string path =
      (std::filesystem::temp_directory_path() / "gevlab_traj_test.csv").string();
  radius::write_trajectory_csv(tr, p, path);
  auto back = radius::read_samples_csv(path);
  REQUIRE(back.size() == tr.samples.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].t == tr.samples[i].t);
    CHECK(back[i].grad_sup == tr.samples[i].grad_sup);
    CHECK(back[i].hr == tr.samples[i].hr);
  }
  std::filesystem::remove(path);
}
