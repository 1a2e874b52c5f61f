#include "gevlab/flows.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gevlab/bessel.hpp"
#include "gevlab/kernels.hpp"
#include "gevlab/seminorms.hpp"

namespace gevlab::flows {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

Euler2D::Euler2D(int grid_n, double cfl) : n_(grid_n), kmax_(grid_n / 3), cfl_(cfl) {
  if (grid_n < 8) throw std::invalid_argument("Euler2D: grid too small");
  Geometry g{Domain::Periodic2D, {kmax_, kmax_, 0}};
  omega_ = SpectralField(g, 1);
}

void Euler2D::set_vorticity(const SpectralField& omega) {
  if (omega.geometry().domain != Domain::Periodic2D || omega.components() != 1)
    throw std::invalid_argument("Euler2D: vorticity must be a 2D scalar field");
  if (omega.geometry().kmax[0] > kmax_ || omega.geometry().kmax[1] > kmax_)
    throw std::invalid_argument("Euler2D: initial band exceeds the dealiased band");
  if (std::abs(omega.mean(0)) > 1e-13 * std::max(1.0, omega.l2_norm()))
    throw std::invalid_argument("Euler2D: mean vorticity must vanish");
  Geometry g{Domain::Periodic2D, {kmax_, kmax_, 0}};
  SpectralField w(g, 1);
  for (int k1 = -omega.geometry().kmax[0]; k1 <= omega.geometry().kmax[0]; ++k1)
    for (int k2 = -omega.geometry().kmax[1]; k2 <= omega.geometry().kmax[1]; ++k2)
      w.at(0, k1, k2, 0) = omega.at(0, k1, k2, 0);
  omega_ = w;
  time_ = 0;
}

SpectralField Euler2D::velocity_of(const SpectralField& w) const {
  SpectralField u(w.geometry(), 2);
  auto src = w.data(0);
  auto u1 = u.data(0);
  auto u2 = u.data(1);
  for (std::size_t idx = 0; idx < src.size(); ++idx) {
    auto [k1, k2, k3] = w.unpack(idx);
    (void)k3;
    const double k2sum = static_cast<double>(k1 * k1 + k2 * k2);
    if (k2sum == 0) continue;
    // psi_hat = -w_hat / |k|^2, u = (-d2 psi, d1 psi)
    u1[idx] = cdouble{0, 1} * (static_cast<double>(k2) / k2sum) * src[idx];
    u2[idx] = cdouble{0, -1} * (static_cast<double>(k1) / k2sum) * src[idx];
  }
  return u;
}

SpectralField Euler2D::velocity() const { return velocity_of(omega_); }

SpectralField Euler2D::rhs(const SpectralField& w) const {
  const std::array<int, 3> grid{n_, n_, 1};
  SpectralField u = velocity_of(w);
  SpectralField wx = w.derivative({1, 0, 0});
  SpectralField wy = w.derivative({0, 1, 0});
  Grid gu1 = to_grid(u, 0, grid);
  Grid gu2 = to_grid(u, 1, grid);
  Grid gwx = to_grid(wx, 0, grid);
  Grid gwy = to_grid(wy, 0, grid);
  Grid prod;
  prod.n = grid;
  prod.cell_volume = gu1.cell_volume;
  prod.v.resize(gu1.v.size());
  kernels::advection_contract(gu1.v, gu2.v, gwx.v, gwy.v, prod.v);
  SpectralField out(w.geometry(), 1);
  from_grid(out, 0, prod);  // truncation to |k| <= n/3 is the 2/3 rule
  out.set_mean_zero();
  return out;
}

double Euler2D::max_velocity() const {
  SpectralField u = velocity();
  return std::max(grid_sup(u, 0, 1.0), grid_sup(u, 1, 1.0));
}

double Euler2D::cfl_dt() const {
  const double umax = max_velocity();
  const double dx = kTwoPi / n_;
  if (umax == 0) return std::numeric_limits<double>::infinity();
  return cfl_ * dx / umax;
}

void Euler2D::step(double dt) {
  if (dt <= 0) throw std::invalid_argument("Euler2D::step: dt must be positive");
  const double bound = cfl_dt();
  if (dt > bound * (1 + 1e-12))
    throw std::invalid_argument("Euler2D::step: dt " + std::to_string(dt) +
                                " exceeds the CFL bound " + std::to_string(bound));
  SpectralField k1 = rhs(omega_);
  SpectralField w2 = omega_;
  w2.axpy(0.5 * dt, k1);
  SpectralField k2 = rhs(w2);
  SpectralField w3 = omega_;
  w3.axpy(0.5 * dt, k2);
  SpectralField k3 = rhs(w3);
  SpectralField w4 = omega_;
  w4.axpy(dt, k3);
  SpectralField k4 = rhs(w4);
  omega_.axpy(dt / 6.0, k1);
  omega_.axpy(dt / 3.0, k2);
  omega_.axpy(dt / 3.0, k3);
  omega_.axpy(dt / 6.0, k4);
  time_ += dt;
}

void Euler2D::advance_to(double t_target, double dt_cap) {
  while (time_ < t_target - 1e-12) {
    double dt = std::min({cfl_dt(), dt_cap, t_target - time_});
    step(dt);
  }
  time_ = t_target;
}

double Euler2D::energy() const {
  auto src = omega_.data(0);
  const double vol = omega_.geometry().volume();
  double s = kernels::chunked_sum(static_cast<std::int64_t>(src.size()), [&](std::int64_t i) {
    auto idx = static_cast<std::size_t>(i);
    auto [k1, k2, k3] = omega_.unpack(idx);
    (void)k3;
    const double k2sum = static_cast<double>(k1 * k1 + k2 * k2);
    if (k2sum == 0) return 0.0;
    return std::norm(src[idx]) / k2sum;
  });
  return 0.5 * vol * s;
}

double Euler2D::enstrophy() const {
  const double n = omega_.l2_norm();
  return 0.5 * n * n;
}

double Euler2D::grad_sup() const {
  SpectralField u = velocity();
  double m = 0;
  for (int c = 0; c < 2; ++c)
    for (int ax = 0; ax < 2; ++ax) {
      MultiIndex d = ax == 0 ? MultiIndex{1, 0, 0} : MultiIndex{0, 1, 0};
      m = std::max(m, derivative_sup_norm(u, c, d));
    }
  return m;
}

int ShearFlow::required_kmax(double t) const {
  const double x = std::abs(t * amplitude);
  int lo = std::max(2, static_cast<int>(x));
  auto jk = bessel_jn_array(lo + 400, x);
  for (int k = lo; k < static_cast<int>(jk.size()); ++k)
    if (std::abs(jk[static_cast<std::size_t>(k)]) < 1e-14) return k;
  throw std::runtime_error("ShearFlow::required_kmax: tail not resolved");
}

SpectralField ShearFlow::snapshot(double t, int kmax) const {
  const double x = t * amplitude;
  if (kmax < 1) throw std::invalid_argument("ShearFlow::snapshot: kmax must be >= 1");
  auto j = bessel_jn_array(kmax, std::abs(x));
  if (std::abs(j[static_cast<std::size_t>(kmax)]) >= 1e-14)
    throw std::invalid_argument("ShearFlow::snapshot: resolution error, |J_K(t a)| >= 1e-14");

  Geometry g{Domain::Periodic3D, {kmax, kmax, 0}};
  SpectralField u(g, 3);
  const double a = amplitude;
  // u1 = a sin x2
  u.at(0, 0, 1, 0) = cdouble{0, -0.5 * a};
  u.at(0, 0, -1, 0) = cdouble{0, 0.5 * a};
  // u3 = a Im[e^{i x1} sum_n J_n(t a) e^{-i n x2}]
  const double sign_t = x < 0 ? -1.0 : 1.0;
  for (int n = -kmax; n <= kmax; ++n) {
    double jn = j[static_cast<std::size_t>(std::abs(n))];
    if (n < 0 && std::abs(n) % 2 == 1) jn = -jn;
    if (sign_t < 0 && n % 2 != 0) jn = -jn;  // J_n(-x) = (-1)^n J_n(x)
    const cdouble c = cdouble{0, -0.5 * a} * jn;
    u.at(2, 1, -n, 0) += c;
    u.at(2, -1, n, 0) += std::conj(c);
  }
  return u;
}

double ShearFlow::grad_sup(double t, int grid_n) const {
  const double a = amplitude;
  double m = 0;
  for (int i = 0; i < grid_n; ++i) {
    const double x2 = kTwoPi * i / grid_n;
    const double c2 = std::cos(x2);
    m = std::max(m, std::abs(a * c2));  // d2 u1
    for (int k = 0; k < grid_n; ++k) {
      const double x1 = kTwoPi * k / grid_n;
      const double ct = std::cos(x1 - t * a * std::sin(x2));
      m = std::max(m, std::abs(a * ct));               // d1 u3
      m = std::max(m, std::abs(a * a * t * ct * c2));  // d2 u3
    }
  }
  return m;
}

double ShearFlow::radius_exact(double t, double M0) const {
  if (t <= 0) throw std::invalid_argument("ShearFlow::radius_exact: t must be positive");
  if (M0 <= 1) throw std::invalid_argument("ShearFlow::radius_exact: M0 must exceed 1");
  return std::asinh(std::log(M0) / (t * amplitude));
}

double ShearFlow::hr(double t, double r) const {
  return hr_norm(snapshot(t, required_kmax(t)), r);
}

}  // namespace gevlab::flows
