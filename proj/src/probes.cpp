#include "gevlab/probes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "gevlab/kernels.hpp"
#include "gevlab/neumann.hpp"
#include "gevlab/seminorms.hpp"

namespace gevlab::probes {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Exponential-basis view of a (possibly slab) field: active modes only,
/// with the physical x3 wavenumber scale and the Parseval weight for the
/// physical domain.
struct ExpVec {
  int ncomp = 0;
  double kscale3 = 1.0;
  double norm_weight = 0.0;
  std::array<int, 3> band = {0, 0, 0};
  struct Mode {
    int k1, k2, k3;
    std::array<cdouble, 3> c;
  };
  std::vector<Mode> modes;
};

ExpVec to_expvec(const SpectralField& u) {
  const Geometry& g = u.geometry();
  ExpVec e;
  e.ncomp = u.components();
  if (g.domain == Domain::Slab) {
    e.kscale3 = std::numbers::pi / g.slab_depth;
    e.norm_weight = kTwoPi * kTwoPi * g.slab_depth;
    e.band = {g.kmax[0], g.kmax[1], g.kmax[2]};
    std::map<std::array<int, 3>, std::array<cdouble, 3>> acc;
    for (const auto& am : collect_active(u)) {
      for (int c = 0; c < e.ncomp; ++c) {
        const cdouble v = u.data(c)[am.idx];
        if (v == cdouble{0, 0}) continue;
        const int n = am.i3;
        if (n == 0) {
          if (u.parity(c) == Parity::Even) acc[{am.k1, am.k2, 0}][static_cast<std::size_t>(c)] += v;
        } else if (u.parity(c) == Parity::Even) {
          acc[{am.k1, am.k2, n}][static_cast<std::size_t>(c)] += 0.5 * v;
          acc[{am.k1, am.k2, -n}][static_cast<std::size_t>(c)] += 0.5 * v;
        } else {
          acc[{am.k1, am.k2, n}][static_cast<std::size_t>(c)] += cdouble{0, -0.5} * v;
          acc[{am.k1, am.k2, -n}][static_cast<std::size_t>(c)] += cdouble{0, 0.5} * v;
        }
      }
    }
    for (const auto& [k, c] : acc) {
      bool nz = false;
      for (int i = 0; i < e.ncomp; ++i) nz = nz || c[static_cast<std::size_t>(i)] != cdouble{0, 0};
      if (nz) e.modes.push_back({k[0], k[1], k[2], c});
    }
  } else {
    e.kscale3 = 1.0;
    e.norm_weight = g.volume();
    e.band = g.kmax;
    for (const auto& am : collect_active(u)) {
      ExpVec::Mode m{am.k1, am.k2, am.i3, {}};
      for (int c = 0; c < e.ncomp; ++c) m.c[static_cast<std::size_t>(c)] = u.data(c)[am.idx];
      e.modes.push_back(m);
    }
  }
  return e;
}

double int_pow(double b, int e) {
  double r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

cdouble ipow(int m) {
  switch (((m % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

/// (ik)^delta at a mode.
cdouble deriv_factor(const ExpVec& e, const ExpVec::Mode& m, const MultiIndex& d) {
  const double mag = int_pow(m.k1, d.a1) * int_pow(m.k2, d.a2) * int_pow(m.k3 * e.kscale3, d.a3);
  return ipow(d.order()) * mag;
}

/// Work area for one Leibniz pair, reused across pairs per thread.
struct PairScratch {
  std::array<int, 3> band = {0, 0, 0};
  std::array<std::vector<cdouble>, 3> h;
  std::vector<cdouble> F;   // ncomp per active mode
  std::vector<cdouble> H;   // ncomp per active mode
  std::vector<cdouble> ik;  // 3 per active mode
  std::vector<std::size_t> touched;

  void ensure(const ExpVec& e) {
    const std::array<int, 3> b{2 * e.band[0], 2 * e.band[1], 2 * e.band[2]};
    if (b != band) {
      band = b;
      const std::size_t n =
          static_cast<std::size_t>(2 * b[0] + 1) * (2 * b[1] + 1) * (2 * b[2] + 1);
      for (auto& v : h) v.assign(n, cdouble{0, 0});
    }
    F.resize(e.modes.size() * 3);
    H.resize(e.modes.size() * 3);
    ik.resize(e.modes.size() * 3);
  }
  std::size_t idx(int k1, int k2, int k3) const {
    return (static_cast<std::size_t>(k1 + band[0]) * (2 * band[1] + 1) + (k2 + band[1])) *
               (2 * band[2] + 1) +
           (k3 + band[2]);
  }
};

/// ||(d^beta u . grad) d^gamma u||_{L2} from the active-mode convolution:
/// component j of the product has coefficients
///   h_j(p+q) += [sum_i (d^beta u_i)(p) * i k_i(q)] * (d^gamma u_j)(q).
double pair_norm(const ExpVec& e, const MultiIndex& beta, const MultiIndex& gamma,
                 PairScratch& ws) {
  ws.ensure(e);
  const std::size_t na = e.modes.size();
  const int nc = e.ncomp;
  for (std::size_t p = 0; p < na; ++p) {
    const auto& m = e.modes[p];
    const cdouble fb = deriv_factor(e, m, beta);
    const cdouble fg = deriv_factor(e, m, gamma);
    for (int c = 0; c < nc; ++c) {
      ws.F[3 * p + static_cast<std::size_t>(c)] = fb * m.c[static_cast<std::size_t>(c)];
      ws.H[3 * p + static_cast<std::size_t>(c)] = fg * m.c[static_cast<std::size_t>(c)];
    }
    for (int c = nc; c < 3; ++c) {
      ws.F[3 * p + static_cast<std::size_t>(c)] = 0;
      ws.H[3 * p + static_cast<std::size_t>(c)] = 0;
    }
    ws.ik[3 * p + 0] = cdouble{0, static_cast<double>(m.k1)};
    ws.ik[3 * p + 1] = cdouble{0, static_cast<double>(m.k2)};
    ws.ik[3 * p + 2] = cdouble{0, m.k3 * e.kscale3};
  }

  ws.touched.clear();
  for (std::size_t p = 0; p < na; ++p) {
    const auto& mp = e.modes[p];
    const cdouble F0 = ws.F[3 * p], F1 = ws.F[3 * p + 1], F2 = ws.F[3 * p + 2];
    for (std::size_t q = 0; q < na; ++q) {
      const auto& mq = e.modes[q];
      const cdouble S = F0 * ws.ik[3 * q] + F1 * ws.ik[3 * q + 1] + F2 * ws.ik[3 * q + 2];
      if (S == cdouble{0, 0}) continue;
      const std::size_t pos = ws.idx(mp.k1 + mq.k1, mp.k2 + mq.k2, mp.k3 + mq.k3);
      ws.touched.push_back(pos);
      for (int j = 0; j < nc; ++j)
        ws.h[static_cast<std::size_t>(j)][pos] += S * ws.H[3 * q + static_cast<std::size_t>(j)];
    }
  }

  double sum = 0;
  for (std::size_t pos : ws.touched)
    for (int j = 0; j < nc; ++j) {
      auto& v = ws.h[static_cast<std::size_t>(j)][pos];
      sum += std::norm(v);
      v = {0, 0};  // leave the buffer clean for the next pair
    }
  // touched may repeat positions; zeroing after the scan makes the sum
  // count each slot once because later visits read zero.
  return std::sqrt(e.norm_weight * sum);
}

struct PairTerm {
  MultiIndex beta, gamma;
  int m;
  double comb;  // M_{beta+gamma} * binom(beta+gamma, beta)
};

std::vector<PairTerm> make_pairs(int m_max) {
  std::vector<PairTerm> out;
  for (int m = 3; m <= m_max; ++m) {
    for (int j = 1; j <= m; ++j) {
      for (const auto& beta : indices_of_order(j)) {
        for (const auto& gamma : indices_of_order(m - j)) {
          const MultiIndex alpha = beta + gamma;
          const double comb = static_cast<double>(weight_u64(alpha)) *
                              multi_binomial(alpha, beta).to_double();
          out.push_back({beta, gamma, m, comb});
        }
      }
    }
  }
  return out;
}

/// lhs partial sums per order m (unweighted by tau; the tau^{m-3}/(m-3)!^s
/// factor is applied at report time).
std::vector<double> commutator_partials(const SpectralField& u, int m_max) {
  const ExpVec e = to_expvec(u);
  const auto pairs = make_pairs(m_max);
  const int nchunks = 128;
  const auto n = static_cast<std::int64_t>(pairs.size());
  std::vector<std::vector<double>> parts(nchunks,
                                         std::vector<double>(static_cast<std::size_t>(m_max) + 1, 0.0));
  kernels::parallel_for(nchunks, [&](std::int64_t c) {
    PairScratch ws;
    auto& acc = parts[static_cast<std::size_t>(c)];
    const std::int64_t lo = n * c / nchunks, hi = n * (c + 1) / nchunks;
    for (std::int64_t i = lo; i < hi; ++i) {
      const auto& pt = pairs[static_cast<std::size_t>(i)];
      acc[static_cast<std::size_t>(pt.m)] += pt.comb * pair_norm(e, pt.beta, pt.gamma, ws);
    }
  });
  std::vector<double> lhs_m(static_cast<std::size_t>(m_max) + 1, 0.0);
  for (const auto& part : parts)
    for (std::size_t m = 0; m < lhs_m.size(); ++m) lhs_m[m] += part[m];
  return lhs_m;
}

std::vector<double> pressure_partials(const SpectralField& u, int m_max) {
  const SpectralField src = neumann::pressure_source(u);
  const SpectralField p = neumann::solve(src).pressure;
  std::vector<double> lhs_m(static_cast<std::size_t>(m_max) + 1, 0.0);
  for (int m = 3; m <= m_max; ++m) {
    const auto alphas = pressure_alpha_set(m);
    std::vector<double> contrib(alphas.size(), 0.0);
    kernels::parallel_for(static_cast<std::int64_t>(alphas.size()), [&](std::int64_t i) {
      const MultiIndex& a = alphas[static_cast<std::size_t>(i)];
      double grad_sq = 0;
      for (int ax = 0; ax < 3; ++ax) {
        MultiIndex d = a;
        (ax == 0 ? d.a1 : ax == 1 ? d.a2 : d.a3) += 1;
        const double nr = derivative_l2_norm(p, 0, d);
        grad_sq += nr * nr;
      }
      contrib[static_cast<std::size_t>(i)] =
          static_cast<double>(weight_u64(a)) * std::sqrt(grad_sq);
    });
    for (double v : contrib) lhs_m[static_cast<std::size_t>(m)] += v;
  }
  return lhs_m;
}

struct GroupNorms {
  SeminormTable l2;
  SeminormTable sup;
};

GroupNorms group_norms(const SpectralField& u, int m_max, double s) {
  GroupNorms g;
  g.l2 = seminorm_table(u, std::max(3, m_max), s, false);
  g.sup = seminorm_table(u, 3, s, true);
  return g;
}

SeminormTable truncated(const SeminormTable& t, int m_max) {
  SeminormTable out = t;
  out.m_max = m_max;
  out.l2.resize(static_cast<std::size_t>(m_max) + 1);
  if (!out.sup.empty()) out.sup.resize(std::min(out.sup.size(), static_cast<std::size_t>(m_max) + 1));
  return out;
}

ProbeReport assemble(const std::vector<double>& lhs_m, const GroupNorms& g, double tau, double s,
                     int m_max, bool pressure) {
  ProbeReport r;
  r.m_max = m_max;
  r.tau = tau;
  r.s = s;
  double lhs = 0, top = 0;
  double log_fact = 0;
  for (int m = 3; m <= m_max; ++m) {
    if (m > 3) log_fact += std::log(static_cast<double>(m - 3));
    const double w = std::exp((m - 3) * std::log(tau) - s * log_fact);
    const double term = lhs_m[static_cast<std::size_t>(m)] * w;
    lhs += term;
    if (m == m_max) top = term;
  }
  r.lhs = lhs;
  r.tail_ratio = lhs > 0 ? top / lhs : 0;
  r.converged = r.tail_ratio < 0.5;

  const double s1 = g.sup.sup[1], s2 = g.sup.sup[2], s3 = g.sup.sup[3];
  const double n2 = g.l2.l2[2], n3 = g.l2.l2[3];
  GevreyNormResult xr = x_norm(truncated(g.l2, m_max), tau);
  r.x_norm = xr.x_norm;
  r.y_norm = xr.y_norm;
  r.group1 = s1 * n3 + s2 * n2 + tau * s2 * n3;
  if (pressure) r.group1 += tau * tau * s3 * n3;
  r.group2 = tau * s1 + tau * tau * s2 + tau * tau * tau * s3 + std::pow(tau, 1.5) * xr.x_norm;
  const double den = r.group1 + r.group2 * r.y_norm;
  r.implied_constant = den > 0 ? r.lhs / den : 0.0;
  return r;
}

std::vector<int> checked(const std::vector<int>& m_maxes) {
  if (m_maxes.empty()) throw std::invalid_argument("probe sweep: empty m_max list");
  for (int m : m_maxes)
    if (m < 3) throw std::invalid_argument("probe: m_max must be >= 3");
  return m_maxes;
}

}  // namespace

std::vector<MultiIndex> pressure_alpha_set(int m) {
  std::vector<MultiIndex> out;
  for (const auto& a : indices_of_order(m))
    if (a.a3 != 0) out.push_back(a);
  return out;
}

double leibniz_term_norm(const SpectralField& u, const MultiIndex& beta, const MultiIndex& gamma) {
  const ExpVec e = to_expvec(u);
  PairScratch ws;
  return pair_norm(e, beta, gamma, ws);
}

std::vector<ProbeReport> commutator_probe_sweep(const SpectralField& u, double tau, double s,
                                                const std::vector<int>& m_maxes) {
  const auto ms = checked(m_maxes);
  const int m_top = *std::max_element(ms.begin(), ms.end());
  const auto lhs_m = commutator_partials(u, m_top);
  const GroupNorms g = group_norms(u, m_top, s);
  std::vector<ProbeReport> out;
  for (int m : ms) out.push_back(assemble(lhs_m, g, tau, s, m, false));
  return out;
}

ProbeReport commutator_probe(const SpectralField& u, double tau, double s, int m_max) {
  return commutator_probe_sweep(u, tau, s, {m_max}).front();
}

std::vector<ProbeReport> pressure_probe_sweep(const SpectralField& u, double tau, double s,
                                              const std::vector<int>& m_maxes) {
  const auto ms = checked(m_maxes);
  const int m_top = *std::max_element(ms.begin(), ms.end());
  const auto lhs_m = pressure_partials(u, m_top);
  const GroupNorms g = group_norms(u, m_top, s);
  std::vector<ProbeReport> out;
  for (int m : ms) out.push_back(assemble(lhs_m, g, tau, s, m, true));
  return out;
}

ProbeReport pressure_probe(const SpectralField& u, double tau, double s, int m_max) {
  return pressure_probe_sweep(u, tau, s, {m_max}).front();
}

}  // namespace gevlab::probes
