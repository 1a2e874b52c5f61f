#pragma once

#include <cstdint>

#include "gevlab/spectral_field.hpp"

namespace gevlab {

/// Seeded random band-limited fields: Gaussian modal amplitudes with an
/// e^{-tau_env |k|} envelope, Hermitian-symmetrized so the fields are real.
/// Mode iteration order is fixed, so a seed pins the field exactly.

/// Scalar on T^2 or T^3. ball_band restricts to |k| <= kmax (euclidean);
/// otherwise the full cube band is populated.
SpectralField random_periodic_scalar(std::uint64_t seed, Domain domain, int kmax, double tau_env,
                                     bool ball_band = false);

/// Mean-zero 2D vorticity (the zero mode стays empty).
SpectralField random_vorticity_2d(std::uint64_t seed, int kmax, double tau_env);

/// Divergence-free 3-component field on T^3 (modewise projection k.u = 0).
SpectralField random_solenoidal_3d(std::uint64_t seed, int kmax, double tau_env,
                                   bool ball_band = false);

/// Mean-zero cosine-basis scalar source on the slab.
SpectralField random_slab_source(std::uint64_t seed, int kmax, double slab_depth, double tau_env,
                                 bool ball_band = false);

/// Slip-compatible divergence-free slab velocity (u1, u2 cosine, u3 sine).
SpectralField random_slab_velocity(std::uint64_t seed, int kmax, double slab_depth, double tau_env,
                                   bool ball_band = false);

}  // namespace gevlab
