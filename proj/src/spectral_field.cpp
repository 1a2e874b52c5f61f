#include "gevlab/spectral_field.hpp"

#include <cmath>
#include <stdexcept>

#include "gevlab/fft.hpp"
#include "gevlab/kernels.hpp"

namespace gevlab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

cdouble ipow(int m) {
  switch (((m % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}
}  // namespace

double Geometry::volume() const {
  switch (domain) {
    case Domain::Periodic2D: return kTwoPi * kTwoPi;
    case Domain::Periodic3D: return kTwoPi * kTwoPi * kTwoPi;
    case Domain::Slab: return kTwoPi * kTwoPi * slab_depth;
  }
  return 0;
}

std::array<int, 3> Geometry::coeff_dims() const {
  int n3 = domain == Domain::Slab ? kmax[2] + 1 : 2 * kmax[2] + 1;
  if (domain == Domain::Periodic2D) n3 = 1;
  return {2 * kmax[0] + 1, 2 * kmax[1] + 1, n3};
}

std::size_t Geometry::coeff_count() const {
  auto d = coeff_dims();
  return static_cast<std::size_t>(d[0]) * d[1] * d[2];
}

double Geometry::wavenumber3(int i3) const {
  if (domain == Domain::Slab) return static_cast<double>(i3) * std::numbers::pi / slab_depth;
  return static_cast<double>(i3);
}

SpectralField::SpectralField(Geometry g, int components, std::vector<Parity> parity)
    : geom_(g), ncomp_(components), dims_(g.coeff_dims()) {
  if (components < 1) throw std::invalid_argument("SpectralField: need >= 1 component");
  if (g.domain == Domain::Periodic2D && g.kmax[2] != 0)
    throw std::invalid_argument("SpectralField: 2D fields have kmax[2] == 0");
  parity_ = parity.empty() ? std::vector<Parity>(static_cast<std::size_t>(components), Parity::Even)
                           : std::move(parity);
  if (static_cast<int>(parity_.size()) != components)
    throw std::invalid_argument("SpectralField: parity list size mismatch");
  coeff_.assign(static_cast<std::size_t>(components),
                std::vector<cdouble>(geom_.coeff_count(), cdouble{0, 0}));
}

std::size_t SpectralField::index(int k1, int k2, int i3) const {
  const int i1 = k1 + geom_.kmax[0];
  const int i2 = k2 + geom_.kmax[1];
  const int j3 = geom_.domain == Domain::Slab ? i3 : i3 + geom_.kmax[2];
  if (i1 < 0 || i1 >= dims_[0] || i2 < 0 || i2 >= dims_[1] || j3 < 0 || j3 >= dims_[2])
    throw std::out_of_range("SpectralField: mode outside stored band");
  return (static_cast<std::size_t>(i1) * dims_[1] + i2) * dims_[2] + j3;
}

cdouble& SpectralField::at(int c, int k1, int k2, int i3) {
  return coeff_[static_cast<std::size_t>(c)][index(k1, k2, i3)];
}
const cdouble& SpectralField::at(int c, int k1, int k2, int i3) const {
  return coeff_[static_cast<std::size_t>(c)][index(k1, k2, i3)];
}

cdouble SpectralField::get(int c, int k1, int k2, int i3) const {
  const int i1 = k1 + geom_.kmax[0];
  const int i2 = k2 + geom_.kmax[1];
  const int j3 = geom_.domain == Domain::Slab ? i3 : i3 + geom_.kmax[2];
  if (i1 < 0 || i1 >= dims_[0] || i2 < 0 || i2 >= dims_[1] || j3 < 0 || j3 >= dims_[2])
    return {0, 0};
  return coeff_[static_cast<std::size_t>(c)][(static_cast<std::size_t>(i1) * dims_[1] + i2) * dims_[2] + j3];
}

std::array<int, 3> SpectralField::unpack(std::size_t idx) const {
  const int j3 = static_cast<int>(idx % dims_[2]);
  const int i2 = static_cast<int>((idx / dims_[2]) % dims_[1]);
  const int i1 = static_cast<int>(idx / (static_cast<std::size_t>(dims_[1]) * dims_[2]));
  const int k3 = geom_.domain == Domain::Slab ? j3 : j3 - geom_.kmax[2];
  return {i1 - geom_.kmax[0], i2 - geom_.kmax[1], k3};
}

double SpectralField::mode_weight3(Parity p, int i3) const {
  if (geom_.domain != Domain::Slab) return 1.0;
  if (i3 == 0) return p == Parity::Even ? 1.0 : 0.0;
  return 0.5;
}

double SpectralField::mode_weight(int c, std::size_t idx) const {
  if (geom_.domain != Domain::Slab) return geom_.volume();
  const int j3 = static_cast<int>(idx % dims_[2]);
  return geom_.volume() * mode_weight3(parity_[static_cast<std::size_t>(c)], j3);
}

SpectralField& SpectralField::operator*=(double s) {
  for (auto& comp : coeff_)
    for (auto& v : comp) v *= s;
  return *this;
}

SpectralField& SpectralField::axpy(double a, const SpectralField& x) {
  if (!same_layout(x)) throw std::invalid_argument("axpy: layout mismatch");
  for (int c = 0; c < ncomp_; ++c) {
    auto& dst = coeff_[static_cast<std::size_t>(c)];
    const auto& src = x.coeff_[static_cast<std::size_t>(c)];
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += a * src[i];
  }
  return *this;
}

double SpectralField::l2_norm_sq(int c) const {
  const auto& v = coeff_[static_cast<std::size_t>(c)];
  return kernels::chunked_sum(static_cast<std::int64_t>(v.size()), [&](std::int64_t i) {
    auto idx = static_cast<std::size_t>(i);
    return mode_weight(c, idx) * std::norm(v[idx]);
  });
}

double SpectralField::l2_norm() const {
  double s = 0;
  for (int c = 0; c < ncomp_; ++c) s += l2_norm_sq(c);
  return std::sqrt(s);
}

double SpectralField::max_abs_coeff() const {
  double m = 0;
  for (const auto& comp : coeff_)
    for (const auto& v : comp) m = std::max(m, std::abs(v));
  return m;
}

cdouble SpectralField::mean(int c) const {
  if (geom_.domain == Domain::Slab && parity_[static_cast<std::size_t>(c)] == Parity::Odd)
    return {0, 0};
  return get(c, 0, 0, 0);
}

void SpectralField::set_mean_zero() {
  for (int c = 0; c < ncomp_; ++c) {
    if (geom_.domain == Domain::Slab && parity_[static_cast<std::size_t>(c)] == Parity::Odd) continue;
    at(c, 0, 0, 0) = {0, 0};
  }
}

void SpectralField::enforce_hermitian() {
  const int K1 = geom_.kmax[0], K2 = geom_.kmax[1];
  const int K3 = geom_.domain == Domain::Slab ? 0 : geom_.kmax[2];
  const bool slab = geom_.domain == Domain::Slab;
  for (int c = 0; c < ncomp_; ++c) {
    for (int k1 = -K1; k1 <= K1; ++k1)
      for (int k2 = -K2; k2 <= K2; ++k2)
        for (int i3 = slab ? 0 : -K3; i3 <= (slab ? geom_.kmax[2] : K3); ++i3) {
          const int m3 = slab ? i3 : -i3;
          cdouble a = at(c, k1, k2, i3);
          cdouble b = at(c, -k1, -k2, m3);
          cdouble avg = 0.5 * (a + std::conj(b));
          at(c, k1, k2, i3) = avg;
          at(c, -k1, -k2, m3) = std::conj(avg);
        }
  }
}

double SpectralField::hermitian_residual() const {
  const int K1 = geom_.kmax[0], K2 = geom_.kmax[1];
  const bool slab = geom_.domain == Domain::Slab;
  const int lo3 = slab ? 0 : -geom_.kmax[2];
  const int hi3 = geom_.kmax[2];
  double r = 0;
  for (int c = 0; c < ncomp_; ++c)
    for (int k1 = -K1; k1 <= K1; ++k1)
      for (int k2 = -K2; k2 <= K2; ++k2)
        for (int i3 = lo3; i3 <= hi3; ++i3) {
          const int m3 = slab ? i3 : -i3;
          r = std::max(r, std::abs(at(c, k1, k2, i3) - std::conj(at(c, -k1, -k2, m3))));
        }
  return r;
}

SpectralField SpectralField::derivative(const MultiIndex& a) const {
  SpectralField out(geom_, ncomp_, parity_);
  const bool slab = geom_.domain == Domain::Slab;
  const bool flip = slab && (a.a3 % 2 != 0);
  for (int c = 0; c < ncomp_; ++c) {
    const Parity p0 = parity_[static_cast<std::size_t>(c)];
    if (flip) out.set_parity(c, p0 == Parity::Even ? Parity::Odd : Parity::Even);
    // sign of the x3 factor: each cos->sin step contributes -1.
    int neg_steps = 0;
    if (slab) neg_steps = (p0 == Parity::Even) ? (a.a3 + 1) / 2 : a.a3 / 2;
    const double sign3 = (neg_steps % 2 == 0) ? 1.0 : -1.0;
    const cdouble tang = ipow(a.a1 + a.a2);
    const auto& src = coeff_[static_cast<std::size_t>(c)];
    auto& dst = out.coeff_[static_cast<std::size_t>(c)];
    for (std::size_t idx = 0; idx < src.size(); ++idx) {
      auto [k1, k2, i3] = unpack(idx);
      const double kap = geom_.wavenumber3(i3);
      double mag = std::pow(static_cast<double>(k1), a.a1) * std::pow(static_cast<double>(k2), a.a2);
      double m3;
      if (slab) {
        m3 = sign3 * std::pow(kap, a.a3);
      } else {
        // periodic: (i k3)^{a3} folded into the tangential i-power below
        m3 = std::pow(static_cast<double>(i3), a.a3);
      }
      cdouble factor = slab ? tang * (mag * m3) : ipow(a.order()) * (mag * m3);
      dst[idx] = factor * src[idx];
    }
  }
  return out;
}

SpectralField SpectralField::tangential_laplacian() const {
  SpectralField out(geom_, ncomp_, parity_);
  for (int c = 0; c < ncomp_; ++c) {
    const auto& src = coeff_[static_cast<std::size_t>(c)];
    auto& dst = out.coeff_[static_cast<std::size_t>(c)];
    for (std::size_t idx = 0; idx < src.size(); ++idx) {
      auto [k1, k2, i3] = unpack(idx);
      (void)i3;
      dst[idx] = -static_cast<double>(k1 * k1 + k2 * k2) * src[idx];
    }
  }
  return out;
}

SpectralField SpectralField::divergence() const {
  if (ncomp_ < 2) throw std::invalid_argument("divergence: needs a vector field");
  Geometry g = geom_;
  SpectralField out(g, 1, {Parity::Even});
  const bool slab = geom_.domain == Domain::Slab;
  if (slab) {
    if (parity_[0] != Parity::Even || parity_[1] != Parity::Even ||
        (ncomp_ > 2 && parity_[2] != Parity::Odd))
      throw std::invalid_argument("divergence: slab fields must be slip-compatible (E,E,O)");
  }
  auto dst = out.data(0);
  for (std::size_t idx = 0; idx < dst.size(); ++idx) {
    auto [k1, k2, i3] = unpack(idx);
    cdouble d = cdouble{0, 1} * (static_cast<double>(k1) * coeff_[0][idx] +
                                 static_cast<double>(k2) * coeff_[1][idx]);
    if (ncomp_ >= 3) {
      const double kap = geom_.wavenumber3(i3);
      if (slab)
        d += kap * coeff_[2][idx];  // d/dx3 of sin(kap x3) is +kap cos
      else
        d += cdouble{0, 1} * (static_cast<double>(i3) * coeff_[2][idx]);
    }
    dst[idx] = d;
  }
  return out;
}

double SpectralField::divergence_l2() const { return divergence().l2_norm(); }

// ---------------------------------------------------------------------------
// Grid synthesis and products via the doubled-torus representation: a slab
// field extends evenly (cos) or oddly (sin) to a periodic box of depth 2L.

namespace {

struct ExpCube {
  std::array<int, 3> band;  // symmetric band per axis
  std::vector<cdouble> c;   // dims (2b+1)^3 ordered k+b

  std::size_t idx(int k1, int k2, int k3) const {
    return (static_cast<std::size_t>(k1 + band[0]) * (2 * band[1] + 1) + (k2 + band[1])) *
               (2 * band[2] + 1) +
           (k3 + band[2]);
  }
};

ExpCube to_exp(const SpectralField& f, int c) {
  const Geometry& g = f.geometry();
  ExpCube e;
  const int K3 = g.kmax[2];
  e.band = {g.kmax[0], g.kmax[1], K3};
  e.c.assign(static_cast<std::size_t>(2 * e.band[0] + 1) * (2 * e.band[1] + 1) * (2 * e.band[2] + 1),
             cdouble{0, 0});
  const bool slab = g.domain == Domain::Slab;
  const Parity p = f.parity(c);
  for (int k1 = -g.kmax[0]; k1 <= g.kmax[0]; ++k1)
    for (int k2 = -g.kmax[1]; k2 <= g.kmax[1]; ++k2) {
      if (!slab) {
        const int lo = g.domain == Domain::Periodic2D ? 0 : -K3;
        const int hi = g.domain == Domain::Periodic2D ? 0 : K3;
        for (int k3 = lo; k3 <= hi; ++k3) e.c[e.idx(k1, k2, k3)] = f.at(c, k1, k2, k3);
      } else {
        for (int n = 0; n <= K3; ++n) {
          const cdouble v = f.at(c, k1, k2, n);
          if (n == 0) {
            if (p == Parity::Even) e.c[e.idx(k1, k2, 0)] = v;
          } else if (p == Parity::Even) {
            e.c[e.idx(k1, k2, n)] += 0.5 * v;
            e.c[e.idx(k1, k2, -n)] += 0.5 * v;
          } else {
            e.c[e.idx(k1, k2, n)] += cdouble{0, -0.5} * v;
            e.c[e.idx(k1, k2, -n)] += cdouble{0, 0.5} * v;
          }
        }
      }
    }
  return e;
}

void fold_from_exp(const ExpCube& e, SpectralField& out, int c) {
  const Geometry& g = out.geometry();
  const bool slab = g.domain == Domain::Slab;
  const Parity p = out.parity(c);
  for (int k1 = -g.kmax[0]; k1 <= g.kmax[0]; ++k1)
    for (int k2 = -g.kmax[1]; k2 <= g.kmax[1]; ++k2) {
      if (!slab) {
        const int K3 = g.domain == Domain::Periodic2D ? 0 : g.kmax[2];
        for (int k3 = -K3; k3 <= K3; ++k3) out.at(c, k1, k2, k3) = e.c[e.idx(k1, k2, k3)];
      } else {
        for (int n = 0; n <= g.kmax[2]; ++n) {
          if (n == 0) {
            out.at(c, k1, k2, 0) = p == Parity::Even ? e.c[e.idx(k1, k2, 0)] : cdouble{0, 0};
          } else if (p == Parity::Even) {
            out.at(c, k1, k2, n) = e.c[e.idx(k1, k2, n)] + e.c[e.idx(k1, k2, -n)];
          } else {
            out.at(c, k1, k2, n) =
                cdouble{0, 1} * (e.c[e.idx(k1, k2, n)] - e.c[e.idx(k1, k2, -n)]);
          }
        }
      }
    }
}

/// Scatter a symmetric-band cube into FFT layout of size n (n_i >= 2b_i+1).
std::vector<cdouble> scatter(const ExpCube& e, const std::array<int, 3>& n) {
  std::vector<cdouble> out(static_cast<std::size_t>(n[0]) * n[1] * n[2], cdouble{0, 0});
  for (int k1 = -e.band[0]; k1 <= e.band[0]; ++k1)
    for (int k2 = -e.band[1]; k2 <= e.band[1]; ++k2)
      for (int k3 = -e.band[2]; k3 <= e.band[2]; ++k3) {
        const int i1 = k1 >= 0 ? k1 : n[0] + k1;
        const int i2 = k2 >= 0 ? k2 : n[1] + k2;
        const int i3 = k3 >= 0 ? k3 : n[2] + k3;
        out[(static_cast<std::size_t>(i1) * n[1] + i2) * n[2] + i3] = e.c[e.idx(k1, k2, k3)];
      }
  return out;
}

ExpCube gather(const std::vector<cdouble>& data, const std::array<int, 3>& n,
               const std::array<int, 3>& band) {
  ExpCube e;
  e.band = band;
  e.c.assign(static_cast<std::size_t>(2 * band[0] + 1) * (2 * band[1] + 1) * (2 * band[2] + 1),
             cdouble{0, 0});
  for (int k1 = -band[0]; k1 <= band[0]; ++k1)
    for (int k2 = -band[1]; k2 <= band[1]; ++k2)
      for (int k3 = -band[2]; k3 <= band[2]; ++k3) {
        const int i1 = k1 >= 0 ? k1 : n[0] + k1;
        const int i2 = k2 >= 0 ? k2 : n[1] + k2;
        const int i3 = k3 >= 0 ? k3 : n[2] + k3;
        e.c[e.idx(k1, k2, k3)] = data[(static_cast<std::size_t>(i1) * n[1] + i2) * n[2] + i3];
      }
  return e;
}

}  // namespace

double Grid::max_abs() const { return kernels::grid_max_abs(v); }

double Grid::quadrature_l2_sq() const {
  return cell_volume * kernels::chunked_sum(static_cast<std::int64_t>(v.size()), [&](std::int64_t i) {
           double x = v[static_cast<std::size_t>(i)];
           return x * x;
         });
}

Grid to_grid(const SpectralField& f, int c, const std::array<int, 3>& grid_n) {
  ExpCube e = to_exp(f, c);
  for (int a = 0; a < 3; ++a)
    if (grid_n[a] < 2 * e.band[a] + 1) throw std::invalid_argument("to_grid: grid too small for band");
  std::vector<cdouble> cube = scatter(e, grid_n);
  fft::backward(grid_n, cube.data());
  Grid g;
  g.n = grid_n;
  g.cell_volume = f.geometry().volume() / static_cast<double>(cube.size());
  g.v.resize(cube.size());
  for (std::size_t i = 0; i < cube.size(); ++i) g.v[i] = cube[i].real();
  return g;
}

Grid to_grid(const SpectralField& f, int c, double oversample) {
  const auto& g = f.geometry();
  std::array<int, 3> n;
  for (int a = 0; a < 3; ++a) {
    const int modes = g.domain == Domain::Slab && a == 2 ? 2 * g.kmax[2] + 1 : 2 * g.kmax[a] + 1;
    n[a] = fft::good_size(std::max(1, static_cast<int>(std::ceil(oversample * modes))));
  }
  if (g.domain == Domain::Periodic2D) n[2] = 1;
  return to_grid(f, c, n);
}

void from_grid(SpectralField& f, int c, const Grid& g) {
  const Geometry& geo = f.geometry();
  const int b3 = geo.kmax[2];
  for (int a = 0; a < 3; ++a) {
    const int need = (geo.domain == Domain::Slab && a == 2 ? 2 * b3 : 2 * geo.kmax[a]) + 1;
    if (g.n[a] < need && !(geo.domain == Domain::Periodic2D && a == 2))
      throw std::invalid_argument("from_grid: grid smaller than the field band");
  }
  std::vector<cdouble> cube(g.v.size());
  for (std::size_t i = 0; i < g.v.size(); ++i) cube[i] = cdouble{g.v[i], 0};
  fft::forward(g.n, cube.data());
  ExpCube e = gather(cube, g.n, {geo.kmax[0], geo.kmax[1], geo.domain == Domain::Periodic2D ? 0 : b3});
  fold_from_exp(e, f, c);
}

SpectralField multiply(const SpectralField& a, int ca, const SpectralField& b, int cb,
                       const std::array<int, 3>& out_kmax) {
  const Geometry& ga = a.geometry();
  const Geometry& gb = b.geometry();
  if (ga.domain != gb.domain || (ga.domain == Domain::Slab && ga.slab_depth != gb.slab_depth))
    throw std::invalid_argument("multiply: domain mismatch");

  ExpCube ea = to_exp(a, ca), eb = to_exp(b, cb);
  std::array<int, 3> n;
  for (int ax = 0; ax < 3; ++ax) {
    int need = ea.band[ax] + eb.band[ax] + out_kmax[ax] + 1;
    n[ax] = fft::good_size(std::max(need, 1));
  }
  if (ga.domain == Domain::Periodic2D) n[2] = 1;

  std::vector<cdouble> cube_a = scatter(ea, n);
  std::vector<cdouble> cube_b = scatter(eb, n);
  fft::backward(n, cube_a.data());
  fft::backward(n, cube_b.data());
  for (std::size_t i = 0; i < cube_a.size(); ++i) cube_a[i] *= cube_b[i];
  fft::forward(n, cube_a.data());

  Geometry gout = ga;
  gout.kmax = out_kmax;
  Parity parity_out = Parity::Even;
  if (ga.domain == Domain::Slab)
    parity_out = (a.parity(ca) == b.parity(cb)) ? Parity::Even : Parity::Odd;
  SpectralField out(gout, 1, {parity_out});
  ExpCube eo = gather(cube_a, n, {gout.kmax[0], gout.kmax[1], gout.kmax[2]});
  fold_from_exp(eo, out, 0);
  return out;
}

double grid_sup(const SpectralField& f, int c, double oversample) {
  return to_grid(f, c, oversample).max_abs();
}

std::vector<ActiveMode> collect_active(const SpectralField& f) {
  std::vector<ActiveMode> out;
  const std::size_t n = f.geometry().coeff_count();
  for (std::size_t idx = 0; idx < n; ++idx) {
    bool nz = false;
    for (int c = 0; c < f.components() && !nz; ++c) nz = f.data(c)[idx] != cdouble{0, 0};
    if (nz) {
      auto [k1, k2, i3] = f.unpack(idx);
      out.push_back({idx, k1, k2, i3});
    }
  }
  return out;
}

}  // namespace gevlab
