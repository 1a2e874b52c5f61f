#pragma once

#include <string>

#include "gevlab/seminorms.hpp"
#include "gevlab/spectral_field.hpp"

namespace gevlab {

/// Binary snapshot format (little-endian):
///   magic "GVLF", u32 version,
///   u8 domain, u8 components, u8 parity[components],
///   i32 kmax[3], f64 slab_depth, f64 time,
///   then per component the coefficients in row-major (k1, k2, k3) order,
///   (re, im) as f64 pairs.
void write_field(const std::string& path, const SpectralField& f, double time);

struct FieldSnapshot {
  SpectralField field;
  double time = 0;
};
FieldSnapshot read_field(const std::string& path);

/// CSV export: columns m, l2_seminorm[, sup_seminorm].
void write_seminorm_csv(const SeminormTable& t, const std::string& path);

}  // namespace gevlab
