#pragma once

#include <limits>
#include <vector>

#include "gevlab/seminorms.hpp"
#include "gevlab/spectral_field.hpp"

namespace gevlab {

/// Shell-max spectrum: per integer shell, the largest |coeff| over all modes
/// and components, together with the physical |k| where it is attained.
struct ShellSpectrum {
  std::vector<double> k;    // |k| of the shell argmax
  std::vector<double> amp;  // shell max of |coeff|
};

ShellSpectrum shell_max_spectrum(const SpectralField& f);

struct FitWindow {
  double kmin = 0.0;
  double kmax = std::numeric_limits<double>::infinity();
  /// Shells below rel_floor * (global max amp) are rounding noise; excluded.
  double rel_floor = 1e-13;
};

/// Radius of analyticity measured from Fourier decay: least-squares slope of
/// log(shell max) against |k| over the window; returns -slope.
/// Throws when fewer than 3 populated shells fall in the window.
double fit_radius(const SpectralField& f, const FitWindow& w = {});

/// Largest tau with a converged X_tau norm <= M0 (bisection; X_tau is
/// monotone in tau). Requires M0 > |v|_3. Returns +inf when every tau
/// qualifies (finitely supported tables below budget).
double max_tau_for_budget(const SeminormTable& table, double M0);

}  // namespace gevlab
