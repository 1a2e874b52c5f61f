#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gevlab/probes.hpp"
#include "gevlab/random_field.hpp"
#include "gevlab/seminorms.hpp"

using namespace gevlab;

namespace {
const double pi = std::numbers::pi;

/// u = (sin x2, 0, sin x1) on T^3: every Leibniz term is a product of two
/// single modes, so the whole commutator sum has a closed form.
SpectralField cross_shear() {
  Geometry g{Domain::Periodic3D, {2, 2, 0}};
  SpectralField u(g, 3);
  u.at(0, 0, 1, 0) = cdouble{0, -0.5};
  u.at(0, 0, -1, 0) = cdouble{0, 0.5};
  u.at(2, 1, 0, 0) = cdouble{0, -0.5};
  u.at(2, -1, 0, 0) = cdouble{0, 0.5};
  return u;
}
}  // namespace

TEST_CASE("zero field gives a zero report") {
  Geometry g{Domain::Periodic3D, {2, 2, 2}};
  SpectralField u(g, 3);
  auto r = probes::commutator_probe(u, 0.5, 1.0, 6);
  CHECK(r.lhs == 0.0);
  CHECK(r.implied_constant == 0.0);
}

TEST_CASE("single shear mode: u.grad u vanishes termwise") {
  // u = (sin x2, 0, 0): each (d^b u . grad) d^g u contains a d/dx1 of a
  // function of x2 alone
  Geometry g{Domain::Periodic3D, {2, 2, 0}};
  SpectralField u(g, 3);
  u.at(0, 0, 1, 0) = cdouble{0, -0.5};
  u.at(0, 0, -1, 0) = cdouble{0, 0.5};
  auto r = probes::commutator_probe(u, 0.5, 1.0, 6);
  CHECK(r.lhs == 0.0);
}

TEST_CASE("two-mode shear: closed-form commutator sum") {
  // nonzero terms need beta = (0,b,0), gamma = (m-b,0,0); each product norm
  // is ||trig(x2) trig(x1)|| = (2 pi)^{3/2}/2 and the weights sum to
  // sum_b binom(m,b) = 2^m - 1.
  SpectralField u = cross_shear();
  const double c = std::pow(2 * pi, 1.5) / 2.0;
  const double tau = 0.4;
  for (int m_max : {3, 4, 6}) {
    double expect = 0;
    for (int m = 3; m <= m_max; ++m) {
      double fact = 1;
      for (int i = 1; i <= m - 3; ++i) fact *= i;
      expect += (std::pow(2.0, m) - 1.0) * c * std::pow(tau, m - 3) / fact;
    }
    auto r = probes::commutator_probe(u, tau, 1.0, m_max);
    CHECK(r.lhs == doctest::Approx(expect).epsilon(1e-10));
  }
}

TEST_CASE("leibniz term norm against the padded-product oracle") {
  auto u = random_solenoidal_3d(5, 2, 0.4, true);
  for (const auto& [beta, gamma] :
       {std::pair<MultiIndex, MultiIndex>{{1, 0, 0}, {0, 1, 1}},
        std::pair<MultiIndex, MultiIndex>{{0, 2, 1}, {1, 0, 0}},
        std::pair<MultiIndex, MultiIndex>{{1, 1, 1}, {0, 0, 0}}}) {
    const double fast = probes::leibniz_term_norm(u, beta, gamma);
    // independent route: explicit fields and alias-free products
    const std::array<int, 3> band{3 * u.geometry().kmax[0], 3 * u.geometry().kmax[1],
                                  3 * u.geometry().kmax[2]};
    Geometry gb = u.geometry();
    gb.kmax = band;
    double sum_sq = 0;
    auto du_beta = u.derivative(beta);
    for (int j = 0; j < 3; ++j) {
      SpectralField acc(gb, 1);
      for (int i = 0; i < 3; ++i) {
        MultiIndex gi = gamma;
        (i == 0 ? gi.a1 : i == 1 ? gi.a2 : gi.a3) += 1;
        auto dg = u.derivative(gi);
        SpectralField a(u.geometry(), 1), b(u.geometry(), 1);
        for (std::size_t idx = 0; idx < a.data(0).size(); ++idx) {
          a.data(0)[idx] = du_beta.data(i)[idx];
          b.data(0)[idx] = dg.data(j)[idx];
        }
        acc.axpy(1.0, multiply(a, 0, b, 0, band));
      }
      const double n = acc.l2_norm();
      sum_sq += n * n;
    }
    CHECK(fast == doctest::Approx(std::sqrt(sum_sq)).epsilon(1e-11));
  }
}

TEST_CASE("commutator lhs is nondecreasing in m_max and tau") {
  auto u = random_solenoidal_3d(9, 2, 0.4, true);
  auto rs = probes::commutator_probe_sweep(u, 0.6, 1.0, {4, 6, 8, 10});
  for (std::size_t i = 1; i < rs.size(); ++i) CHECK(rs[i].lhs >= rs[i - 1].lhs);
  double prev = 0;
  for (double tau : {0.2, 0.4, 0.8}) {
    auto r = probes::commutator_probe(u, tau, 1.0, 8);
    CHECK(r.lhs >= prev);
    prev = r.lhs;
  }
}

TEST_CASE("implied constant is scale invariant") {
  auto u = random_solenoidal_3d(23, 2, 0.4, true);
  auto r1 = probes::commutator_probe(u, 0.7, 1.0, 8);
  for (double c : {2.0, 10.0}) {
    SpectralField uc = u;
    uc *= c;
    auto r2 = probes::commutator_probe(uc, 0.7, 1.0, 8);
    CHECK(r2.lhs == doctest::Approx(c * c * r1.lhs).epsilon(1e-12));
    CHECK(r2.implied_constant == doctest::Approx(r1.implied_constant).epsilon(1e-10));
  }
}

TEST_CASE("pressure alpha set excludes tangential indices") {
  for (int m : {3, 5, 8}) {
    auto set = probes::pressure_alpha_set(m);
    CHECK(static_cast<int>(set.size()) == (m + 1) * (m + 2) / 2 - (m + 1));
    for (const auto& a : set) {
      CHECK(a.a3 != 0);
      CHECK(a.order() == m);
    }
  }
}

TEST_CASE("pressure probe: modulated vortex closed form at m = 3") {
  // u = (sin x1 cos x2 cos x3, -cos x1 sin x2 cos x3, 0) on the depth-pi slab
  // gives p with modes cos2x1/8, cos2x2/8, cos2x1 cos2x3/16, cos2x2 cos2x3/16;
  // the alpha3 != 0 sum at m = 3 is (4 sqrt2 + 2) pi^{3/2}.
  Geometry g{Domain::Slab, {2, 2, 2}, pi};
  SpectralField u(g, 3, {Parity::Even, Parity::Even, Parity::Odd});
  for (int s1 : {-1, 1})
    for (int s2 : {-1, 1}) {
      u.at(0, s1, s2, 1) = cdouble{0, -0.25 * s1};  // sin x1 cos x2 (cos x3)
      u.at(1, s1, s2, 1) = cdouble{0, 0.25 * s2};   // -cos x1 sin x2 (cos x3)
    }
  CHECK(u.divergence_l2() < 1e-13);

  auto r = probes::pressure_probe(u, 0.5, 1.0, 3);
  const double expect = (4.0 * std::sqrt(2.0) + 2.0) * std::pow(pi, 1.5);
  CHECK(r.lhs == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("pressure probe is scale invariant and tau-monotone") {
  auto u = random_slab_velocity(31, 2, 2 * pi, 0.4, true);
  auto r1 = probes::pressure_probe(u, 0.6, 1.0, 8);
  SpectralField u10 = u;
  u10 *= 10.0;
  auto r2 = probes::pressure_probe(u10, 0.6, 1.0, 8);
  CHECK(r2.implied_constant == doctest::Approx(r1.implied_constant).epsilon(1e-10));
  auto lo = probes::pressure_probe(u, 0.3, 1.0, 8);
  CHECK(lo.lhs <= r1.lhs);
}
