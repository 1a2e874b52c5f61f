#pragma once

#include <array>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include "gevlab/multi_index.hpp"

namespace gevlab {

using cdouble = std::complex<double>;

enum class Domain { Periodic2D, Periodic3D, Slab };

/// x3 basis on the slab: Even = cosine (Neumann-compatible), Odd = sine
/// (vanishes on the faces). Ignored on periodic domains.
enum class Parity { Even, Odd };

/// Periodic box T^d with period 2*pi per axis, or the slab T^2 x (0, L)
/// with a cosine/sine basis in x3. kmax is the per-axis truncation: modes
/// satisfy |k1| <= kmax[0], |k2| <= kmax[1], and on the third axis
/// |k3| <= kmax[2] (periodic) or 0 <= n <= kmax[2] (slab).
struct Geometry {
  Domain domain = Domain::Periodic3D;
  std::array<int, 3> kmax = {0, 0, 0};
  double slab_depth = 2.0 * std::numbers::pi;

  int dim() const { return domain == Domain::Periodic2D ? 2 : 3; }
  double volume() const;
  std::array<int, 3> coeff_dims() const;
  std::size_t coeff_count() const;

  /// Physical wavenumber along x3 for storage index i3.
  double wavenumber3(int i3) const;

  bool operator==(const Geometry& o) const {
    return domain == o.domain && kmax == o.kmax &&
           (domain != Domain::Slab || slab_depth == o.slab_depth);
  }
};

/// Band-limited scalar or vector field stored as modal coefficients.
/// Real-valued fields keep Hermitian symmetry on the periodic axes.
class SpectralField {
 public:
  SpectralField() = default;
  SpectralField(Geometry g, int components, std::vector<Parity> parity = {});

  const Geometry& geometry() const { return geom_; }
  int components() const { return ncomp_; }
  Parity parity(int c) const { return parity_[static_cast<std::size_t>(c)]; }
  void set_parity(int c, Parity p) { parity_[static_cast<std::size_t>(c)] = p; }

  /// Coefficient access; k1, k2 symmetric, i3 is n (slab) or k3 (periodic).
  cdouble& at(int c, int k1, int k2, int i3);
  const cdouble& at(int c, int k1, int k2, int i3) const;
  /// Zero outside the stored band.
  cdouble get(int c, int k1, int k2, int i3) const;

  std::span<const cdouble> data(int c) const { return coeff_[static_cast<std::size_t>(c)]; }
  std::span<cdouble> data(int c) { return coeff_[static_cast<std::size_t>(c)]; }

  /// Storage index -> (k1, k2, i3).
  std::array<int, 3> unpack(std::size_t idx) const;

  /// Parseval weight for |coeff|^2 at storage slot (c, idx):
  /// integral of |field|^2 equals sum of weight * |coeff|^2.
  double mode_weight(int c, std::size_t idx) const;
  double mode_weight3(Parity p, int i3) const;

  SpectralField& operator*=(double s);
  SpectralField& axpy(double a, const SpectralField& x);

  double l2_norm_sq(int c) const;
  double l2_norm() const;  // vector fields: sqrt of summed component squares
  double max_abs_coeff() const;
  cdouble mean(int c) const;  // the zero mode (volume average)
  void set_mean_zero();

  void enforce_hermitian();
  double hermitian_residual() const;

  /// Exact spectral derivative; on the slab, each d/dx3 toggles parity.
  SpectralField derivative(const MultiIndex& a) const;
  /// Tangential Laplacian d11 + d22 (parity preserved).
  SpectralField tangential_laplacian() const;

  /// div u as a scalar field; slab vector fields must be slip-compatible
  /// (u1, u2 even and u3 odd).
  SpectralField divergence() const;
  double divergence_l2() const;

  bool same_layout(const SpectralField& o) const {
    return geom_ == o.geom_ && ncomp_ == o.ncomp_;
  }

 private:
  std::size_t index(int k1, int k2, int i3) const;
  Geometry geom_;
  int ncomp_ = 0;
  std::array<int, 3> dims_ = {0, 0, 0};
  std::vector<Parity> parity_;
  std::vector<std::vector<cdouble>> coeff_;
};

/// Real-space samples of one component.
struct Grid {
  std::array<int, 3> n = {1, 1, 1};
  double cell_volume = 0;  // physical volume / number of points
  std::vector<double> v;

  double max_abs() const;
  double quadrature_l2_sq() const;  // cell_volume * sum v^2
};

/// Synthesis of component c on a grid with at least `oversample` points per
/// stored mode (alias-free for linear quantities at oversample >= 1).
Grid to_grid(const SpectralField& f, int c, double oversample = 1.0);
Grid to_grid(const SpectralField& f, int c, const std::array<int, 3>& grid_n);

/// Analysis of real grid values into component c of f, truncated to the
/// field's band. Inverse of to_grid for band-limited data on the same grid.
void from_grid(SpectralField& f, int c, const Grid& g);

/// Exact pointwise product of two scalar components: evaluated on a padded
/// grid large enough that no aliasing occurs, then truncated to out_kmax.
/// Slab parities combine (even*even = even, even*odd = odd, odd*odd = even).
SpectralField multiply(const SpectralField& a, int ca, const SpectralField& b, int cb,
                       const std::array<int, 3>& out_kmax);

/// Sup-norm estimate of a component on an oversampled grid.
double grid_sup(const SpectralField& f, int c, double oversample = 2.0);

struct ActiveMode {
  std::size_t idx;
  int k1, k2, i3;
};

/// Storage slots where any component is nonzero.
std::vector<ActiveMode> collect_active(const SpectralField& f);

}  // namespace gevlab
