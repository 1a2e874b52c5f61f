#pragma once

#include <vector>

#include "gevlab/multi_index.hpp"
#include "gevlab/spectral_field.hpp"

namespace gevlab::probes {

/// Truncated evaluation of one side-by-side bound: lhs is the weighted
/// double sum, group1/group2 the right-side groups, and implied_constant
/// their quotient lhs / (group1 + group2 * y_norm).
struct ProbeReport {
  int m_max = 0;
  double tau = 0, s = 1;
  double lhs = 0;
  double group1 = 0, group2 = 0;
  double x_norm = 0, y_norm = 0;
  double implied_constant = 0;
  double tail_ratio = 0;  // top-m contribution / lhs
  bool converged = false;  // tail_ratio < 0.5
};

/// Commutator bound: lhs = sum_m sum_{|a|=m} sum_{0 != b <= a}
/// M_a binom(a,b) ||(d^b u . grad) d^{a-b} u||_{L2} tau^{m-3}/(m-3)!^s,
/// with group1 = |u|_{1,inf}|u|_3 + |u|_{2,inf}|u|_2 + tau |u|_{2,inf}|u|_3
/// and group2 = tau|u|_{1,inf} + tau^2|u|_{2,inf} + tau^3|u|_{3,inf}
///            + tau^{3/2}||u||_{X_tau}.
ProbeReport commutator_probe(const SpectralField& u, double tau, double s, int m_max);

/// One pass to max(m_maxes), reported at each requested truncation.
std::vector<ProbeReport> commutator_probe_sweep(const SpectralField& u, double tau, double s,
                                                const std::vector<int>& m_maxes);

/// Pressure bound on the slab: lhs = sum_m sum_{|a|=m, a3 != 0}
/// M_a ||grad d^a p||_{L2} tau^{m-3}/(m-3)!^s with p from the Neumann solve
/// of the quadratic source; group1 gains the tau^2 |u|_{3,inf}|u|_3 term.
ProbeReport pressure_probe(const SpectralField& u, double tau, double s, int m_max);
std::vector<ProbeReport> pressure_probe_sweep(const SpectralField& u, double tau, double s,
                                              const std::vector<int>& m_maxes);

/// ||(d^beta u . grad) d^gamma u||_{L2}, exact via sparse modal convolution
/// over the active modes (no aliasing, no truncation).
double leibniz_term_norm(const SpectralField& u, const MultiIndex& beta, const MultiIndex& gamma);

/// The alpha enumerator for the pressure sum (|alpha| = m, alpha3 != 0).
std::vector<MultiIndex> pressure_alpha_set(int m);

}  // namespace gevlab::probes
