#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gevlab/multi_index.hpp"
#include "gevlab/spectral_field.hpp"

namespace gevlab::neumann {

/// Solution of -Delta p = v on the slab with homogeneous Neumann faces
/// (cosine basis in x3 satisfies dp/dx3 = 0 at both faces automatically).
struct NeumannSolution {
  SpectralField pressure;  // mean-zero gauge
  SpectralField source;
  double h2_constant = 0;  // observed bound on the |k_i k_j|/|k|^2 multiplier
};

/// Modal division by k1^2 + k2^2 + kappa3^2; rejects sources that are not
/// mean-zero (reports the residual mean) or not cosine-basis.
NeumannSolution solve(const SpectralField& v);

/// The quadratic pressure source d_j u_i d_i u_j, assembled from exact
/// (alias-free padded) pointwise products and projected to mean zero.
/// u must be slip-compatible on the slab (u1, u2 cosine, u3 sine) and
/// divergence-free to 1e-8 relative.
SpectralField pressure_source(const SpectralField& u);

/// d3 d^alpha p computed only through tangential Laplacians of p and
/// derivatives of v, per the normal-derivative reduction identities.
/// Requires alpha.a3 >= 1 and -Delta p = v.
SpectralField d3_recursion(const SpectralField& p, const SpectralField& v, const MultiIndex& alpha);

enum class RegularityVariant { D3, D1, D2 };

struct RegularityProbe {
  double lhs = 0;      // ||d_i d^alpha p||_{L2}
  double rhs_sum = 0;  // sum over the lemma's beta set of binom(s+t,s) ||d^beta v||
  double ratio = 0;    // lhs / rhs_sum (0 when both vanish)
};

/// Both sides of the higher-regularity estimate at one alpha.
/// D3 requires alpha.a3 >= 1; D1/D2 require alpha.a3 >= 2.
RegularityProbe regularity_probe(const SpectralField& p, const SpectralField& v,
                                const MultiIndex& alpha, RegularityVariant which);

/// The beta multi-indices (with their binomial coefficients) summed on the
/// right side, exposed for enumeration tests.
std::vector<std::pair<MultiIndex, std::uint64_t>> regularity_beta_set(const MultiIndex& alpha,
                                                                    RegularityVariant which);

struct MultiplierProbe {
  double ratio1 = 0, ratio2 = 0;
  bool defined = true;  // false when ||d^alpha' v|| == 0
};

/// ||d_i d_3 d^alpha' p|| / ||d^alpha' v|| for i = 1, 2; the exact slab
/// multiplier bound is |k_i kappa3| / (k1^2 + k2^2 + kappa3^2) <= 1/2.
MultiplierProbe h2_multiplier_probe(const SpectralField& p, const SpectralField& v,
                             const MultiIndex& alpha_tangential);

}  // namespace gevlab::neumann
