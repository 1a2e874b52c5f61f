#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace gevlab::radius {

/// Constants entering the radius bookkeeping. C is the single tunable
/// constant (the estimates leave it existential; 1.0 is the reproducible
/// default). r > 9/2 is required for the Sobolev embedding step.
struct RadiusParams {
  double C = 1.0;
  double s = 1.0;
  double r = 5.0;
  double tau0 = 1.0;
  double u0_hr = 0.0;  // ||u0||_{H^r}
  double u0_x = 0.0;   // ||u0||_{X_{tau0}}

  double c_tau0() const { return 1.0 + tau0 * tau0; }
  double c_tau0_prime() const { return std::sqrt(tau0) + std::pow(tau0, 1.5); }
  void validate() const;
};

struct Sample {
  double t = 0;
  double grad_sup = 0;  // ||grad u(t)||_{L^inf}
  double hr = 0;        // ||u(t)||_{H^r}
  double tau_measured = std::nan("");  // optional Fourier-decay radius
};

/// Time series of the radius quantities. G is carried as log G so long
/// horizons (G ~ e^{t^2}) stay representable.
struct Trajectory {
  std::vector<Sample> samples;
  std::vector<double> log_G;  // C * integral of grad_sup (trapezoid)
  std::vector<double> M;      // u0_x + c_tau0 * integral of hr^2
  std::vector<double> tau_ode;
  std::vector<double> tau_paper;
  std::vector<double> tau_lower;
  std::vector<double> cond2;  // per-sample residual of the tau_ode series
  double C0 = 0;              // minimal constant in the lower-bound envelope
  double cond2_residual_ode = 0;

  double t_final() const { return samples.empty() ? 0.0 : samples.back().t; }
};

/// Trapezoidal accumulation of log G and M; samples must be strictly
/// time-ordered.
void accumulate(Trajectory& traj, const RadiusParams& p);

/// RK4 on the equality form dtau/dt = -C tau g(t) - C tau^{3/2} (C' h(t) + M(t)),
/// integrated in log(tau) (positivity is structural), with linear
/// interpolation of the sampled coefficients and `substeps` RK4 steps per
/// sample interval.
std::vector<double> integrate_tau_ode(const Trajectory& traj, const RadiusParams& p, int substeps = 8);

/// The closed-form sufficient radius
/// tau(t) = G^{-1/2} (tau0^{-1/2} + C int (C' h + M) G^{-1})^{-1/2},
/// evaluated with the same quadratures. Note tau(0) = tau0^{1/4}.
std::vector<double> tau_paper_series(const Trajectory& traj, const RadiusParams& p);

/// Lower-bound envelope tau_lb(t) = G^{-1/2} / (C0 (1+t)); C0 is the minimal
/// constant with C0 (1+t)^2 >= tau0^{-1/2} + C int_0^t (C' H0 + X0 + s c_tau0 H0^2) ds
/// over the sampled horizon (closed form: the integrand is linear in s).
struct LowerBound {
  std::vector<double> tau;
  double C0 = 0;
};
LowerBound lower_bound_series(const Trajectory& traj, const RadiusParams& p);

/// Per-sample residual tau' + C tau g + C tau^{3/2} (C' h + M) with tau'
/// from centered differences (5-point on uniform grids); NaN at the stencil
/// edges. Requires at least 3 samples.
std::vector<double> condition2_residuals(const std::vector<double>& tau, const Trajectory& traj,
                                         const RadiusParams& p);

/// Max of the finite per-sample residuals.
double check_condition2(const std::vector<double>& tau, const Trajectory& traj, const RadiusParams& p);

/// accumulate + ode + paper + lower bound + condition-2 residual.
Trajectory build_trajectory(std::vector<Sample> samples, const RadiusParams& p, int ode_substeps = 8);

void write_trajectory_csv(const Trajectory& traj, const RadiusParams& p, const std::string& path);
std::vector<Sample> read_samples_csv(const std::string& path);

}  // namespace gevlab::radius
