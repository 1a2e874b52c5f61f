#include "gevlab/random_field.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>

#include "gevlab/rng.hpp"

namespace gevlab {

namespace {

cdouble gaussian_c(Rng& rng) { return {rng.gaussian(), rng.gaussian()}; }

double envelope(double tau_env, double k1, double k2, double k3) {
  return std::exp(-tau_env * std::sqrt(k1 * k1 + k2 * k2 + k3 * k3));
}

}  // namespace

SpectralField random_periodic_scalar(std::uint64_t seed, Domain domain, int kmax, double tau_env,
                                     bool ball_band) {
  if (domain == Domain::Slab) throw std::invalid_argument("random_periodic_scalar: periodic only");
  const int K3 = domain == Domain::Periodic3D ? kmax : 0;
  Geometry g{domain, {kmax, kmax, K3}};
  SpectralField f(g, 1);
  Rng rng(seed);
  for (int k1 = -kmax; k1 <= kmax; ++k1)
    for (int k2 = -kmax; k2 <= kmax; ++k2)
      for (int k3 = -K3; k3 <= K3; ++k3) {
        // visit each Hermitian pair once, from its lexicographically positive side
        if (std::make_tuple(k1, k2, k3) < std::make_tuple(-k1, -k2, -k3)) continue;
        if (ball_band && k1 * k1 + k2 * k2 + k3 * k3 > kmax * kmax) continue;
        cdouble c = gaussian_c(rng) * envelope(tau_env, k1, k2, k3);
        if (k1 == 0 && k2 == 0 && k3 == 0) c = {c.real(), 0};
        f.at(0, k1, k2, k3) = c;
        f.at(0, -k1, -k2, -k3) = std::conj(c);
      }
  return f;
}

SpectralField random_vorticity_2d(std::uint64_t seed, int kmax, double tau_env) {
  SpectralField f = random_periodic_scalar(seed, Domain::Periodic2D, kmax, tau_env);
  f.at(0, 0, 0, 0) = {0, 0};
  return f;
}

SpectralField random_solenoidal_3d(std::uint64_t seed, int kmax, double tau_env, bool ball_band) {
  Geometry g{Domain::Periodic3D, {kmax, kmax, kmax}};
  SpectralField f(g, 3);
  Rng rng(seed);
  for (int k1 = -kmax; k1 <= kmax; ++k1)
    for (int k2 = -kmax; k2 <= kmax; ++k2)
      for (int k3 = -kmax; k3 <= kmax; ++k3) {
        if (std::make_tuple(k1, k2, k3) < std::make_tuple(-k1, -k2, -k3)) continue;
        if (ball_band && k1 * k1 + k2 * k2 + k3 * k3 > kmax * kmax) continue;
        const double env = envelope(tau_env, k1, k2, k3);
        std::array<cdouble, 3> c{gaussian_c(rng) * env, gaussian_c(rng) * env,
                                 gaussian_c(rng) * env};
        const double kk = k1 * k1 + k2 * k2 + k3 * k3;
        if (kk > 0) {
          // remove the component along k
          const cdouble dot = (static_cast<double>(k1) * c[0] + static_cast<double>(k2) * c[1] +
                               static_cast<double>(k3) * c[2]) /
                              kk;
          c[0] -= dot * static_cast<double>(k1);
          c[1] -= dot * static_cast<double>(k2);
          c[2] -= dot * static_cast<double>(k3);
        } else {
          c = {cdouble{0, 0}, cdouble{0, 0}, cdouble{0, 0}};  // no mean flow
        }
        for (int comp = 0; comp < 3; ++comp) {
          f.at(comp, k1, k2, k3) = c[static_cast<std::size_t>(comp)];
          f.at(comp, -k1, -k2, -k3) = std::conj(c[static_cast<std::size_t>(comp)]);
        }
      }
  f.enforce_hermitian();
  return f;
}

SpectralField random_slab_source(std::uint64_t seed, int kmax, double slab_depth, double tau_env,
                                 bool ball_band) {
  Geometry g{Domain::Slab, {kmax, kmax, kmax}, slab_depth};
  SpectralField f(g, 1, {Parity::Even});
  Rng rng(seed);
  const double ks = std::numbers::pi / slab_depth;
  for (int k1 = -kmax; k1 <= kmax; ++k1)
    for (int k2 = -kmax; k2 <= kmax; ++k2)
      for (int n = 0; n <= kmax; ++n) {
        if (std::make_tuple(k1, k2) < std::make_tuple(-k1, -k2)) continue;  // x3 basis is real
        if (ball_band && k1 * k1 + k2 * k2 + n * n > kmax * kmax) continue;
        cdouble c = gaussian_c(rng) * envelope(tau_env, k1, k2, n * ks);
        if (k1 == 0 && k2 == 0) c = {c.real(), 0};
        f.at(0, k1, k2, n) = c;
        f.at(0, -k1, -k2, n) = std::conj(c);
      }
  f.at(0, 0, 0, 0) = {0, 0};  // mean-zero (solvability)
  return f;
}

SpectralField random_slab_velocity(std::uint64_t seed, int kmax, double slab_depth, double tau_env,
                                   bool ball_band) {
  Geometry g{Domain::Slab, {kmax, kmax, kmax}, slab_depth};
  SpectralField f(g, 3, {Parity::Even, Parity::Even, Parity::Odd});
  Rng rng(seed);
  const double ks = std::numbers::pi / slab_depth;
  for (int k1 = -kmax; k1 <= kmax; ++k1)
    for (int k2 = -kmax; k2 <= kmax; ++k2)
      for (int n = 0; n <= kmax; ++n) {
        if (std::make_tuple(k1, k2) < std::make_tuple(-k1, -k2)) continue;
        if (ball_band && k1 * k1 + k2 * k2 + n * n > kmax * kmax) continue;
        const double kap = n * ks;
        const double env = envelope(tau_env, k1, k2, kap);
        std::array<cdouble, 3> c{gaussian_c(rng) * env, gaussian_c(rng) * env,
                                 gaussian_c(rng) * env};
        // divergence coefficient is i k1 u1 + i k2 u2 + kap u3; project it out.
        // d = (i k1, i k2, kap), subtract conj(d) (d.c)/|d|^2
        const cdouble d1{0, static_cast<double>(k1)}, d2{0, static_cast<double>(k2)};
        const double dd = k1 * k1 + k2 * k2 + kap * kap;
        if (n == 0) c[2] = {0, 0};  // sine basis has no n = 0 mode
        if (dd > 0) {
          const cdouble div = (d1 * c[0] + d2 * c[1] + kap * c[2]) / dd;
          c[0] -= std::conj(d1) * div;
          c[1] -= std::conj(d2) * div;
          c[2] -= kap * div;
        }
        if (k1 == 0 && k2 == 0) {
          c[0] = {c[0].real(), 0};
          c[1] = {c[1].real(), 0};
          c[2] = {c[2].real(), 0};
        }
        for (int comp = 0; comp < 3; ++comp) {
          f.at(comp, k1, k2, n) = c[static_cast<std::size_t>(comp)];
          f.at(comp, -k1, -k2, n) = std::conj(c[static_cast<std::size_t>(comp)]);
        }
      }
  return f;
}

}  // namespace gevlab
