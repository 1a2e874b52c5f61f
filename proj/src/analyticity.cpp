#include "gevlab/analyticity.hpp"

#include <cmath>
#include <stdexcept>

namespace gevlab {

ShellSpectrum shell_max_spectrum(const SpectralField& f) {
  const Geometry& g = f.geometry();
  const auto dims = g.coeff_dims();
  std::vector<double> amp, kk;
  for (int c = 0; c < f.components(); ++c) {
    const auto data = f.data(c);
    for (std::size_t idx = 0; idx < data.size(); ++idx) {
      const double a = std::abs(data[idx]);
      if (a == 0) continue;
      const int i3 = static_cast<int>(idx % static_cast<std::size_t>(dims[2]));
      const int i2 = static_cast<int>((idx / static_cast<std::size_t>(dims[2])) % static_cast<std::size_t>(dims[1]));
      const int i1 = static_cast<int>(idx / (static_cast<std::size_t>(dims[2]) * static_cast<std::size_t>(dims[1])));
      const double k1 = i1 - g.kmax[0];
      const double k2 = i2 - g.kmax[1];
      const double k3 = g.domain == Domain::Slab ? g.wavenumber3(i3) : i3 - g.kmax[2];
      const double kn = std::sqrt(k1 * k1 + k2 * k2 + k3 * k3);
      const auto shell = static_cast<std::size_t>(std::lround(kn));
      if (shell >= amp.size()) {
        amp.resize(shell + 1, 0.0);
        kk.resize(shell + 1, 0.0);
      }
      if (a > amp[shell]) {
        amp[shell] = a;
        kk[shell] = kn;
      }
    }
  }
  ShellSpectrum out;
  for (std::size_t sIdx = 0; sIdx < amp.size(); ++sIdx) {
    if (amp[sIdx] > 0) {
      out.k.push_back(kk[sIdx]);
      out.amp.push_back(amp[sIdx]);
    }
  }
  return out;
}

double fit_radius(const SpectralField& f, const FitWindow& w) {
  ShellSpectrum s = shell_max_spectrum(f);
  double global_max = 0;
  for (double a : s.amp) global_max = std::max(global_max, a);
  if (global_max == 0) throw std::invalid_argument("fit_radius: zero field");

  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < s.k.size(); ++i) {
    if (s.k[i] <= 0.5) continue;  // zero-mode shell carries no decay information
    if (s.k[i] < w.kmin || s.k[i] > w.kmax) continue;
    if (s.amp[i] < w.rel_floor * global_max) continue;
    xs.push_back(s.k[i]);
    ys.push_back(std::log(s.amp[i]));
  }
  if (xs.size() < 3)
    throw std::invalid_argument("fit_radius: fewer than 3 populated shells in the fit window");

  const auto n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom <= 0) throw std::runtime_error("fit_radius: degenerate abscissas");
  const double slope = (n * sxy - sx * sy) / denom;
  return -slope;
}

double max_tau_for_budget(const SeminormTable& table, double M0) {
  const double base = table.l2.size() > 3 ? table.l2[3] : 0.0;
  if (!(M0 > base))
    throw std::invalid_argument("max_tau_for_budget: requires M0 > |v|_3");

  auto ok = [&](double tau) {
    GevreyNormResult r = x_norm(table, tau);
    return r.converged && r.x_norm <= M0;
  };

  double hi = 1.0;
  const double hard_cap = 1e12;
  while (ok(hi)) {
    hi *= 2.0;
    if (hi > hard_cap) return std::numeric_limits<double>::infinity();
  }
  double lo = 0.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = lo > 0 ? 0.5 * (lo + hi) : hi / 2.0;
    if (ok(mid))
      lo = mid;
    else
      hi = mid;
    if (lo > 0 && (hi - lo) <= 1e-12 * hi) break;
  }
  return lo;
}

}  // namespace gevlab
