#include "gevlab/seminorms.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gevlab/kernels.hpp"

namespace gevlab {

namespace {

double int_pow(double base, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

/// Parseval norm (not squared: the log path may represent norms whose square
/// overflows) for one component. flat_amp > 0 replaces each populated
/// coefficient by that amplitude; structurally zero modes stay exact zeros,
/// so the noise-floor model only charges rounding noise where data lives.
double derivative_norm(const SpectralField& v, int c, const MultiIndex& a, double flat_amp) {
  const Geometry& g = v.geometry();
  const auto dims = g.coeff_dims();
  const bool flat = flat_amp > 0;

  // per-axis |k|^a lookup tables
  std::vector<double> p1(static_cast<std::size_t>(dims[0]));
  std::vector<double> p2(static_cast<std::size_t>(dims[1]));
  std::vector<double> p3(static_cast<std::size_t>(dims[2]));
  for (int i = 0; i < dims[0]; ++i) p1[static_cast<std::size_t>(i)] = int_pow(std::abs(i - g.kmax[0]), a.a1);
  for (int i = 0; i < dims[1]; ++i) p2[static_cast<std::size_t>(i)] = int_pow(std::abs(i - g.kmax[1]), a.a2);
  for (int i = 0; i < dims[2]; ++i) {
    const int k3 = g.domain == Domain::Slab ? i : i - g.kmax[2];
    p3[static_cast<std::size_t>(i)] = int_pow(std::abs(g.wavenumber3(k3)), a.a3);
  }

  const auto data = v.data(c);
  const auto n = static_cast<std::int64_t>(data.size());
  // overflow guard: largest factor^2 * coeff^2 must stay in range
  double max_factor = p1[0] * p2[0] * p3.back();
  max_factor = std::max(max_factor, p1.back() * p2.back() * p3.back());
  const double max_amp = flat ? flat_amp : v.max_abs_coeff();
  const bool log_path = max_factor > 0 && max_amp > 0 &&
                        2.0 * (std::log10(max_factor) + std::log10(max_amp)) > 280.0;

  if (!log_path) {
    const double sum_sq = kernels::chunked_sum(n, [&](std::int64_t i) {
      auto idx = static_cast<std::size_t>(i);
      if (data[idx] == cdouble{0, 0}) return 0.0;
      const double amp2 = flat ? flat_amp * flat_amp : std::norm(data[idx]);
      const std::size_t i3 = idx % static_cast<std::size_t>(dims[2]);
      const std::size_t i2 = (idx / static_cast<std::size_t>(dims[2])) % static_cast<std::size_t>(dims[1]);
      const std::size_t i1 = idx / (static_cast<std::size_t>(dims[2]) * static_cast<std::size_t>(dims[1]));
      const double f = p1[i1] * p2[i2] * p3[i3];
      return v.mode_weight(c, idx) * f * f * amp2;
    });
    return std::sqrt(sum_sq);
  }

  // log-magnitude accumulation: norm = exp(M) sqrt(sum exp(2(l - M)))
  double M = -std::numeric_limits<double>::infinity();
  std::vector<double> logs(static_cast<std::size_t>(n), -std::numeric_limits<double>::infinity());
  for (std::int64_t i = 0; i < n; ++i) {
    auto idx = static_cast<std::size_t>(i);
    if (data[idx] == cdouble{0, 0}) continue;
    const double amp = flat ? flat_amp : std::abs(data[idx]);
    const std::size_t i3 = idx % static_cast<std::size_t>(dims[2]);
    const std::size_t i2 = (idx / static_cast<std::size_t>(dims[2])) % static_cast<std::size_t>(dims[1]);
    const std::size_t i1 = idx / (static_cast<std::size_t>(dims[2]) * static_cast<std::size_t>(dims[1]));
    const double f = p1[i1] * p2[i2] * p3[i3];
    if (f == 0) continue;
    const double w = v.mode_weight(c, idx);
    if (w == 0) continue;
    logs[idx] = std::log(f) + std::log(amp) + 0.5 * std::log(w);
    M = std::max(M, logs[idx]);
  }
  if (!std::isfinite(M)) return 0.0;
  double s = 0;
  for (double l : logs)
    if (std::isfinite(l)) s += std::exp(2.0 * (l - M));
  return std::exp(M) * std::sqrt(s);
}

}  // namespace

double derivative_l2_norm(const SpectralField& v, int c, const MultiIndex& a) {
  return derivative_norm(v, c, a, 0.0);
}

double derivative_l2_norm(const SpectralField& v, const MultiIndex& a) {
  double s = 0;
  for (int c = 0; c < v.components(); ++c) {
    const double n = derivative_norm(v, c, a, 0.0);
    s += n * n;
  }
  return std::sqrt(s);
}

double derivative_sup_norm(const SpectralField& v, int c, const MultiIndex& a, double oversample) {
  SpectralField d = v.derivative(a);
  return grid_sup(d, c, oversample);
}

SeminormTable seminorm_table(const SpectralField& v, int m_max, double s, bool with_sup) {
  if (m_max < 0) throw std::invalid_argument("seminorm_table: m_max must be >= 0");
  if (s < 1.0) throw std::invalid_argument("seminorm_table: Gevrey index s must be >= 1");
  SeminormTable t;
  t.s = s;
  t.m_max = m_max;
  t.l2.assign(static_cast<std::size_t>(m_max) + 1, 0.0);
  if (with_sup) t.sup.assign(static_cast<std::size_t>(m_max) + 1, 0.0);

  const double maxc = v.max_abs_coeff();
  const double eps_amp = maxc * std::numeric_limits<double>::epsilon();
  std::vector<double> floor_m(static_cast<std::size_t>(m_max) + 1, 0.0);

  // flatten the (m, alpha) loop; each slot is independent
  std::vector<MultiIndex> alphas = indices_up_to(m_max);
  std::vector<double> contrib(alphas.size(), 0.0);
  std::vector<double> floor_contrib(alphas.size(), 0.0);
  kernels::parallel_for(static_cast<std::int64_t>(alphas.size()), [&](std::int64_t i) {
    const MultiIndex& a = alphas[static_cast<std::size_t>(i)];
    const double w = static_cast<double>(weight_u64(a));
    double nrm = 0, flr = 0;
    for (int c = 0; c < v.components(); ++c) {
      nrm += derivative_norm(v, c, a, 0.0);
      if (eps_amp > 0) flr += derivative_norm(v, c, a, eps_amp);
    }
    contrib[static_cast<std::size_t>(i)] = w * nrm;
    floor_contrib[static_cast<std::size_t>(i)] = w * flr;
  });
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const int m = alphas[i].order();
    t.l2[static_cast<std::size_t>(m)] += contrib[i];
    floor_m[static_cast<std::size_t>(m)] += floor_contrib[i];
  }
  for (int m = 0; m <= m_max; ++m) {
    if (maxc > 0 && t.l2[static_cast<std::size_t>(m)] < 10.0 * floor_m[static_cast<std::size_t>(m)]) {
      t.noise_floor_m = m;
      break;
    }
  }

  if (with_sup) {
    for (const auto& a : alphas) {
      double nrm = 0;
      for (int c = 0; c < v.components(); ++c) nrm += derivative_sup_norm(v, c, a);
      t.sup[static_cast<std::size_t>(a.order())] += static_cast<double>(weight_u64(a)) * nrm;
    }
  }
  return t;
}

GevreyNormResult x_norm(const SeminormTable& table, double tau) {
  if (tau <= 0) throw std::invalid_argument("x_norm: tau must be positive");
  GevreyNormResult r;
  r.tau = tau;
  double x = 0, xc = 0, y = 0, yc = 0;
  double last_term = 0;
  double log_fact = 0;  // log((m-3)!)
  for (int m = 3; m <= table.m_max; ++m) {
    if (m > 3) log_fact += std::log(static_cast<double>(m - 3));
    const double lw = (m - 3) * std::log(tau) - table.s * log_fact;
    const double term = table.l2[static_cast<std::size_t>(m)] * std::exp(lw);
    double yv = table.l2[static_cast<std::size_t>(m)];
    double yterm = 0;
    if (m >= 4) yterm = yv * (m - 3) * std::exp((m - 4) * std::log(tau) - table.s * log_fact);
    double t1 = term - xc;
    double s1 = x + t1;
    xc = (s1 - x) - t1;
    x = s1;
    double t2 = yterm - yc;
    double s2 = y + t2;
    yc = (s2 - y) - t2;
    y = s2;
    if (m == table.m_max) last_term = term;
  }
  r.x_norm = x;
  r.y_norm = y;
  r.tail_ratio = x > 0 ? last_term / x : 0.0;
  const bool floor_ok = table.noise_floor_m < 0 || table.noise_floor_m > table.m_max;
  r.converged = (x == 0) || (r.tail_ratio < 1.0 && floor_ok);
  return r;
}

double hr_norm(const SpectralField& v, double r) {
  const Geometry& g = v.geometry();
  const auto dims = g.coeff_dims();
  double s = 0;
  for (int c = 0; c < v.components(); ++c) {
    const auto data = v.data(c);
    s += kernels::chunked_sum(static_cast<std::int64_t>(data.size()), [&](std::int64_t i) {
      auto idx = static_cast<std::size_t>(i);
      if (data[idx] == cdouble{0, 0}) return 0.0;
      const int i3 = static_cast<int>(idx % static_cast<std::size_t>(dims[2]));
      const int i2 = static_cast<int>((idx / static_cast<std::size_t>(dims[2])) % static_cast<std::size_t>(dims[1]));
      const int i1 = static_cast<int>(idx / (static_cast<std::size_t>(dims[2]) * static_cast<std::size_t>(dims[1])));
      const double k1 = i1 - g.kmax[0];
      const double k2 = i2 - g.kmax[1];
      const double k3 = g.domain == Domain::Slab ? g.wavenumber3(i3) : i3 - g.kmax[2];
      const double k2sum = k1 * k1 + k2 * k2 + k3 * k3;
      return v.mode_weight(c, idx) * std::pow(1.0 + k2sum, r) * std::norm(data[idx]);
    });
  }
  return std::sqrt(s);
}

}  // namespace gevlab
