#include "gevlab/neumann.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "gevlab/seminorms.hpp"

namespace gevlab::neumann {

namespace {

void require_slab_scalar(const SpectralField& f, const char* who) {
  if (f.geometry().domain != Domain::Slab || f.components() != 1)
    throw std::invalid_argument(std::string(who) + ": expected a scalar slab field");
}

SpectralField component(const SpectralField& u, int c) {
  SpectralField out(u.geometry(), 1, {u.parity(c)});
  auto dst = out.data(0);
  auto src = u.data(c);
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = src[i];
  return out;
}

MultiIndex unit(int axis) {
  return axis == 0 ? MultiIndex{1, 0, 0} : axis == 1 ? MultiIndex{0, 1, 0} : MultiIndex{0, 0, 1};
}

}  // namespace

NeumannSolution solve(const SpectralField& v) {
  require_slab_scalar(v, "neumann::solve");
  if (v.parity(0) != Parity::Even)
    throw std::invalid_argument("neumann::solve: source must be cosine-basis (even parity)");
  const double vnorm = v.l2_norm();
  const double mean = std::abs(v.mean(0));
  if (mean > 1e-10 * std::max(1.0, vnorm))
    throw std::invalid_argument("neumann::solve: source not mean-zero, residual mean " +
                                std::to_string(mean));

  const Geometry& g = v.geometry();
  NeumannSolution sol{SpectralField(g, 1, {Parity::Even}), v, 0.0};
  auto dst = sol.pressure.data(0);
  auto src = v.data(0);
  for (std::size_t idx = 0; idx < src.size(); ++idx) {
    auto [k1, k2, n] = v.unpack(idx);
    const double kap = g.wavenumber3(n);
    const double sym = k1 * k1 + k2 * k2 + kap * kap;
    if (sym == 0) {
      dst[idx] = {0, 0};  // gauge: mean-zero pressure
      continue;
    }
    dst[idx] = src[idx] / sym;
    if (src[idx] != cdouble{0, 0}) {
      const double dk1 = std::abs(static_cast<double>(k1)), dk2 = std::abs(static_cast<double>(k2));
      const double kk = std::max({dk1 * dk2, dk1 * kap, dk2 * kap, dk1 * dk1, dk2 * dk2, kap * kap});
      sol.h2_constant = std::max(sol.h2_constant, kk / sym);
    }
  }
  return sol;
}

SpectralField pressure_source(const SpectralField& u) {
  if (u.geometry().domain != Domain::Slab || u.components() != 3)
    throw std::invalid_argument("pressure_source: expected a 3-component slab field");
  if (u.parity(0) != Parity::Even || u.parity(1) != Parity::Even || u.parity(2) != Parity::Odd)
    throw std::invalid_argument("pressure_source: velocity must be slip-compatible (E,E,O)");

  double grad_scale = 0;
  for (int c = 0; c < 3; ++c)
    for (int ax = 0; ax < 3; ++ax) {
      const double d = derivative_l2_norm(u, c, unit(ax));
      grad_scale += d * d;
    }
  grad_scale = std::sqrt(grad_scale);
  const double div = u.divergence_l2();
  if (grad_scale > 0 && div > 1e-8 * grad_scale)
    throw std::invalid_argument("pressure_source: velocity not divergence-free, |div u|/|grad u| = " +
                                std::to_string(div / grad_scale));

  const Geometry& g = u.geometry();
  const std::array<int, 3> out_kmax = {2 * g.kmax[0], 2 * g.kmax[1], 2 * g.kmax[2]};
  Geometry gout = g;
  gout.kmax = out_kmax;
  SpectralField src(gout, 1, {Parity::Even});

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      SpectralField di_uj = component(u, j).derivative(unit(i));
      SpectralField dj_ui = component(u, i).derivative(unit(j));
      SpectralField prod = multiply(dj_ui, 0, di_uj, 0, out_kmax);
      if (prod.parity(0) != Parity::Even)
        throw std::logic_error("pressure_source: product parity must be even");
      src.axpy(1.0, prod);
    }
  src.set_mean_zero();
  return src;
}

SpectralField d3_recursion(const SpectralField& p, const SpectralField& v, const MultiIndex& alpha) {
  require_slab_scalar(p, "d3_recursion");
  require_slab_scalar(v, "d3_recursion");
  if (alpha.a3 < 1)
    throw std::invalid_argument("d3_recursion: identity applies only for alpha.a3 >= 1");

  const MultiIndex tangential{alpha.a1, alpha.a2, 0};
  const bool odd = alpha.a3 % 2 == 1;
  const int k = odd ? (alpha.a3 - 1) / 2 : (alpha.a3 - 2) / 2;

  // (-Delta')^{k+1} d^{alpha'} p, with one extra d3 in the even case
  SpectralField res = p.derivative(odd ? tangential : MultiIndex{alpha.a1, alpha.a2, 1});
  for (int i = 0; i <= k; ++i) res = res.tangential_laplacian();
  if ((k + 1) % 2 == 1) res *= -1.0;

  // + sum_j (-1)^{k-j+1} d3^{2j(+1)} (Delta')^{k-j} d^{alpha'} v
  for (int j = 0; j <= k; ++j) {
    SpectralField term = v.derivative({alpha.a1, alpha.a2, odd ? 2 * j : 2 * j + 1});
    for (int i = 0; i < k - j; ++i) term = term.tangential_laplacian();
    const double sign = ((k - j + 1) % 2 == 1) ? -1.0 : 1.0;
    res.axpy(sign, term);
  }
  return res;
}

std::vector<std::pair<MultiIndex, std::uint64_t>> regularity_beta_set(const MultiIndex& alpha,
                                                                    RegularityVariant which) {
  std::vector<std::pair<MultiIndex, std::uint64_t>> out;
  const int drop = which == RegularityVariant::D3 ? 1 : 2;
  for (int s = 0;; ++s) {
    bool any_t = false;
    for (int t = 0;; ++t) {
      const int b3 = alpha.a3 - drop - 2 * s - 2 * t;
      if (b3 < 0) break;
      any_t = true;
      MultiIndex beta;
      switch (which) {
        case RegularityVariant::D3: beta = {alpha.a1 + 2 * s, alpha.a2 + 2 * t, b3}; break;
        case RegularityVariant::D1: beta = {alpha.a1 + 2 * s + 1, alpha.a2 + 2 * t, b3}; break;
        case RegularityVariant::D2: beta = {alpha.a1 + 2 * s, alpha.a2 + 2 * t + 1, b3}; break;
      }
      out.emplace_back(beta, binomial_u64(s + t, s));
    }
    if (!any_t) break;
  }
  return out;
}

RegularityProbe regularity_probe(const SpectralField& p, const SpectralField& v,
                                const MultiIndex& alpha, RegularityVariant which) {
  require_slab_scalar(p, "regularity_probe");
  require_slab_scalar(v, "regularity_probe");
  if (which == RegularityVariant::D3 && alpha.a3 < 1)
    throw std::invalid_argument("regularity_probe: d3 variant requires alpha.a3 >= 1");
  if (which != RegularityVariant::D3 && alpha.a3 < 2)
    throw std::invalid_argument("regularity_probe: d1/d2 variants require alpha.a3 >= 2");

  const int axis = which == RegularityVariant::D3 ? 2 : (which == RegularityVariant::D1 ? 0 : 1);
  RegularityProbe probe;
  probe.lhs = derivative_l2_norm(p, 0, alpha + unit(axis));
  for (const auto& [beta, coeff] : regularity_beta_set(alpha, which))
    probe.rhs_sum += static_cast<double>(coeff) * derivative_l2_norm(v, 0, beta);
  probe.ratio = probe.rhs_sum > 0 ? probe.lhs / probe.rhs_sum
                                  : (probe.lhs > 0 ? std::numeric_limits<double>::infinity() : 0.0);
  return probe;
}

MultiplierProbe h2_multiplier_probe(const SpectralField& p, const SpectralField& v,
                             const MultiIndex& alpha_tangential) {
  require_slab_scalar(p, "h2_multiplier_probe");
  require_slab_scalar(v, "h2_multiplier_probe");
  if (alpha_tangential.a3 != 0)
    throw std::invalid_argument("h2_multiplier_probe: alpha must be tangential (a3 == 0)");

  MultiplierProbe out;
  const double den = derivative_l2_norm(v, 0, alpha_tangential);
  if (den == 0) {
    out.defined = false;
    return out;
  }
  const MultiIndex a = alpha_tangential;
  out.ratio1 = derivative_l2_norm(p, 0, MultiIndex{a.a1 + 1, a.a2, 1}) / den;
  out.ratio2 = derivative_l2_norm(p, 0, MultiIndex{a.a1, a.a2 + 1, 1}) / den;
  return out;
}

}  // namespace gevlab::neumann
