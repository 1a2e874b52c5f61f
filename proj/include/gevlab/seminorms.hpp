#pragma once

#include <vector>

#include "gevlab/multi_index.hpp"
#include "gevlab/spectral_field.hpp"

namespace gevlab {

/// ||d^alpha v_c||_{L2} by Parseval, exact for band-limited fields.
/// Switches to a log-magnitude accumulation when k^alpha would overflow.
double derivative_l2_norm(const SpectralField& v, int c, const MultiIndex& a);

/// Vector L2 norm sqrt(sum_c ||d^alpha v_c||^2).
double derivative_l2_norm(const SpectralField& v, const MultiIndex& a);

/// ||d^alpha v_c||_{L_inf} on a 2x oversampled grid (slight under-estimate,
/// the known grid-max bias).
double derivative_sup_norm(const SpectralField& v, int c, const MultiIndex& a, double oversample = 2.0);

/// The sequence |v|_m = sum_{|alpha|=m} M_alpha ||d^alpha v||_{L2} for
/// m = 0..m_max, plus the sup-norm variant on request. Vector fields are
/// handled componentwise and summed (a convention; echoed in metadata).
struct SeminormTable {
  double s = 1.0;
  int m_max = 0;
  std::vector<double> l2;   // size m_max + 1
  std::vector<double> sup;  // empty unless requested
  /// First m at which the machine-epsilon coefficient floor dominates the
  /// table entry (-1 if never). Entries past it measure rounding noise.
  int noise_floor_m = -1;
  static constexpr const char* kVectorConvention = "componentwise-sum";
};

SeminormTable seminorm_table(const SpectralField& v, int m_max, double s, bool with_sup = false);

struct GevreyNormResult {
  double tau = 0;
  double x_norm = 0;       // sum_{m>=3} |v|_m tau^{m-3}/(m-3)!^s, truncated
  double y_norm = 0;       // sum_{m>=4} |v|_m (m-3) tau^{m-4}/(m-3)!^s
  double tail_ratio = 0;   // last X term / partial sum
  bool converged = false;  // tail_ratio < 1 and truncation within the noise budget
};

/// Truncated X_tau and Y_tau sums with compensated summation in increasing m.
GevreyNormResult x_norm(const SeminormTable& table, double tau);

/// Sobolev norm (sum over modes of (1+|k|^2)^r |v_k|^2)^{1/2}, all components.
double hr_norm(const SpectralField& v, double r);

}  // namespace gevlab
