#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gevlab/analyticity.hpp"
#include "gevlab/bessel.hpp"
#include "gevlab/flows.hpp"
#include "gevlab/random_field.hpp"
#include "gevlab/seminorms.hpp"

using namespace gevlab;

namespace {
const double pi = std::numbers::pi;

SpectralField taylor_green(int kmax) {
  Geometry g{Domain::Periodic2D, {kmax, kmax, 0}};
  SpectralField w(g, 1);
  // 2 cos x1 cos x2
  for (int s1 : {-1, 1})
    for (int s2 : {-1, 1}) w.at(0, s1, s2, 0) = 0.5;
  return w;
}
}  // namespace

TEST_CASE("bessel array against the standard library") {
  for (double x : {0.5, 1.0, 5.0, 20.0}) {
    auto j = bessel_jn_array(30, x);
    for (int n = 0; n <= 30; ++n) {
      const double ref = std::cyl_bessel_j(n, x);
      CHECK(j[static_cast<std::size_t>(n)] == doctest::Approx(ref).epsilon(1e-11));
    }
  }
  CHECK(bessel_jn(0, 0.0) == 1.0);
  CHECK(bessel_jn(3, -2.0) == doctest::Approx(-bessel_jn(3, 2.0)));
  CHECK(bessel_jn(2, -2.0) == doctest::Approx(bessel_jn(2, 2.0)));
  CHECK(bessel_jn(0, 1.0) == doctest::Approx(0.7651976866).epsilon(1e-9));
  CHECK(bessel_jn(1, 1.0) == doctest::Approx(0.4400505857).epsilon(1e-9));
}

TEST_CASE("taylor-green is a steady state") {
  flows::Euler2D solver(64);
  solver.set_vorticity(taylor_green(1));
  const double n0 = solver.vorticity().l2_norm();
  for (int i = 0; i < 100; ++i) solver.step(0.01);
  SpectralField diff = solver.vorticity();
  diff.axpy(-1.0, taylor_green(solver.kmax()));
  CHECK(diff.l2_norm() / n0 < 1e-6);
}

TEST_CASE("zero vorticity stays zero") {
  flows::Euler2D solver(32);
  Geometry g{Domain::Periodic2D, {2, 2, 0}};
  solver.set_vorticity(SpectralField(g, 1));
  solver.step(0.1);
  CHECK(solver.vorticity().l2_norm() == 0.0);
}

TEST_CASE("euler conserves energy and enstrophy") {
  flows::Euler2D solver(64);
  SpectralField w = random_vorticity_2d(7, 10, 0.5);
  {
    flows::Euler2D probe(64);
    probe.set_vorticity(w);
    w *= 1.0 / probe.max_velocity();
  }
  solver.set_vorticity(w);
  const double e0 = solver.energy();
  const double z0 = solver.enstrophy();
  solver.advance_to(0.5, 2.5e-3);
  CHECK(std::abs(solver.energy() - e0) / e0 < 0.5 * 1e-8);
  CHECK(std::abs(solver.enstrophy() - z0) / z0 < 0.5 * 1e-8);
}

TEST_CASE("euler rejects a CFL-violating step") {
  flows::Euler2D solver(32);
  solver.set_vorticity(taylor_green(1));
  CHECK_THROWS_AS(solver.step(1e3), std::invalid_argument);
}

TEST_CASE("vorticity Lp norms are conserved") {
  flows::Euler2D solver(128);
  SpectralField w = random_vorticity_2d(19, 10, 0.6);
  {  // unit max velocity, the ensemble convention
    flows::Euler2D probe(128);
    probe.set_vorticity(w);
    w *= 1.0 / probe.max_velocity();
  }
  solver.set_vorticity(w);
  auto lp = [&](double p) {
    Grid g = to_grid(solver.vorticity(), 0, 2.0);
    double s = 0;
    for (double v : g.v) s += std::pow(std::abs(v), p);
    return std::pow(g.cell_volume * s, 1.0 / p);
  };
  const double l2_0 = lp(2), l4_0 = lp(4);
  solver.advance_to(1.0, 2.5e-3);
  CHECK(std::abs(lp(2) - l2_0) / l2_0 < 1e-6);
  CHECK(std::abs(lp(4) - l4_0) / l4_0 < 1e-6);
}

TEST_CASE("shear snapshot: untransported start and Jacobi-Anger coefficients") {
  flows::ShearFlow sh;
  auto u0 = sh.snapshot(0.0, 2);
  CHECK(std::abs(u0.at(2, 1, 0, 0) - cdouble{0, -0.5}) < 1e-15);
  CHECK(std::abs(u0.at(2, 1, -1, 0)) == 0.0);

  const int K = sh.required_kmax(1.0);
  auto u1 = sh.snapshot(1.0, K);
  for (int n = 0; n <= 6; ++n) {
    const double ref = 0.5 * std::abs(std::cyl_bessel_j(n, 1.0));
    CHECK(std::abs(u1.at(2, 1, -n, 0)) == doctest::Approx(ref).epsilon(1e-10));
  }
  CHECK(u1.hermitian_residual() < 1e-15);
  const int K7 = sh.required_kmax(7.0);
  CHECK(sh.snapshot(7.0, K7).hermitian_residual() < 1e-15);
  CHECK_THROWS_AS((void)sh.snapshot(7.0, 3), std::invalid_argument);
}

TEST_CASE("shear snapshot solves the euler equations") {
  // residual of du/dt + u.grad u with a centered time difference
  flows::ShearFlow sh;
  const double t = 1.5, dt = 1e-4;
  const int K = sh.required_kmax(t + dt);
  auto um = sh.snapshot(t - dt, K);
  auto up = sh.snapshot(t + dt, K);
  auto uc = sh.snapshot(t, K);

  SpectralField resid(up.geometry(), 3);
  resid.axpy(1.0 / (2 * dt), up);
  resid.axpy(-1.0 / (2 * dt), um);
  // + u . grad u (d3 terms vanish: no x3 dependence)
  const std::array<int, 3> band{2 * K, 2 * K, 0};
  Geometry gb{Domain::Periodic3D, {2 * K, 2 * K, 0}};
  SpectralField adv(gb, 3);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 2; ++i) {
      SpectralField duj(uc.geometry(), 1);
      auto d = uc.derivative(i == 0 ? MultiIndex{1, 0, 0} : MultiIndex{0, 1, 0});
      for (std::size_t idx = 0; idx < duj.data(0).size(); ++idx) duj.data(0)[idx] = d.data(j)[idx];
      SpectralField ui(uc.geometry(), 1);
      for (std::size_t idx = 0; idx < ui.data(0).size(); ++idx) ui.data(0)[idx] = uc.data(i)[idx];
      auto prod = multiply(ui, 0, duj, 0, band);
      for (std::size_t idx = 0; idx < adv.data(j).size(); ++idx)
        adv.data(j)[idx] += prod.data(0)[idx];
    }
  // embed resid into the wide band and subtract
  SpectralField wide(gb, 3);
  for (int c = 0; c < 3; ++c)
    for (int k1 = -K; k1 <= K; ++k1)
      for (int k2 = -K; k2 <= K; ++k2) wide.at(c, k1, k2, 0) = resid.at(c, k1, k2, 0);
  wide.axpy(1.0, adv);
  CHECK(wide.l2_norm() < 1e-6);
}

TEST_CASE("shear gradient sup norm") {
  flows::ShearFlow sh;
  CHECK(sh.grad_sup(0.0) == doctest::Approx(1.0).epsilon(1e-12));
  const double g10 = sh.grad_sup(10.0);
  CHECK(g10 >= 10.0 - 1e-9);
  CHECK(g10 <= 11.0);
}

TEST_CASE("gradient sup of a zero flow vanishes") {
  flows::Euler2D solver(32);
  Geometry g{Domain::Periodic2D, {2, 2, 0}};
  solver.set_vorticity(SpectralField(g, 1));
  CHECK(solver.grad_sup() == 0.0);
  CHECK(std::isinf(solver.cfl_dt()));
}

TEST_CASE("shear exact radius") {
  flows::ShearFlow sh;
  CHECK(sh.radius_exact(1.0, std::exp(1.0)) == doctest::Approx(std::asinh(1.0)).epsilon(1e-14));
  // r ~ log(M0)/t for large t
  CHECK(1000.0 * sh.radius_exact(1000.0, std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-4));
  // entire initial data: radius blows up as t -> 0+
  CHECK(sh.radius_exact(1e-8, std::exp(1.0)) > 19.0);
  CHECK_THROWS_AS((void)sh.radius_exact(0.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS((void)sh.radius_exact(1.0, 0.5), std::invalid_argument);
}

TEST_CASE("shear radius log-log slope is -1") {
  flows::ShearFlow sh;
  const double M0 = std::exp(1.0);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (double t = 10.0; t <= 100.0; t *= 1.12246) {
    const double x = std::log(t), y = std::log(sh.radius_exact(t, M0));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  CHECK(slope == doctest::Approx(-1.0).epsilon(0.02));
}

TEST_CASE("measured radius tracks the exact radius and decreases") {
  flows::ShearFlow sh;
  // the least-squares slope inverts about half the spectral dynamic range,
  // so the matching budget is sqrt(1/rel_floor) with the 1e-13 fit floor
  const double M0 = std::sqrt(1e13);
  double prev = 1e300;
  for (double t : {1.0, 2.0, 5.0, 10.0, 20.0, 35.0, 50.0}) {
    auto u = sh.snapshot(t, sh.required_kmax(t));
    const double fit = fit_radius(u);
    const double exact = sh.radius_exact(t, M0);
    CHECK(fit > 0.5 * exact);
    CHECK(fit < 2.0 * exact);
    CHECK(fit < prev);
    prev = fit;
  }
}
