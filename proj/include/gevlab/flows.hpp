#pragma once

#include "gevlab/spectral_field.hpp"

namespace gevlab::flows {

/// 2D periodic Euler in vorticity form, pseudo-spectral with the 2/3 rule
/// and classic RK4. Band kmax = grid_n / 3.
class Euler2D {
 public:
  explicit Euler2D(int grid_n, double cfl = 0.5);

  int grid_n() const { return n_; }
  int kmax() const { return kmax_; }
  double time() const { return time_; }
  double cfl() const { return cfl_; }

  void set_vorticity(const SpectralField& omega);  // Periodic2D scalar, mean-zero
  const SpectralField& vorticity() const { return omega_; }

  SpectralField velocity() const;  // 2-component field from the streamfunction
  double energy() const;
  double enstrophy() const;
  double max_velocity() const;  // grid max over |u1|, |u2|
  double cfl_dt() const;        // cfl * dx / max|u|
  double grad_sup() const;      // max |du_i/dx_j| on a 2x oversampled grid

  /// One RK4 step of dw/dt + u.grad w = 0; rejects dt above the CFL bound.
  void step(double dt);
  /// Steps with dt <= min(cfl_dt, dt_cap), landing exactly on t_target.
  void advance_to(double t_target, double dt_cap);

 private:
  SpectralField rhs(const SpectralField& w) const;
  SpectralField velocity_of(const SpectralField& w) const;

  int n_;
  int kmax_;
  double cfl_;
  double time_ = 0;
  SpectralField omega_;
};

/// Exact shear solution u = (a sin x2, 0, a sin(x1 - t a sin x2)) of the
/// 3D Euler equations with zero pressure gradient.
struct ShearFlow {
  double amplitude = 1.0;

  /// Smallest K with |J_K(t a)| < 1e-14 (spectral tail resolved).
  int required_kmax(double t) const;

  /// Modal snapshot on T^3 (third axis unused); x2 spectrum of u3 follows
  /// the Jacobi-Anger coefficients J_n(t a).
  SpectralField snapshot(double t, int kmax) const;

  /// Closed-form max |grad u| entry, evaluated on an oversampled grid.
  double grad_sup(double t, int grid_n = 1024) const;

  /// Largest strip half-width r with sup over |Im| <= r of the transported
  /// factor bounded by M0: asinh(log(M0) / (t a)). Requires t > 0, M0 > 1.
  double radius_exact(double t, double M0) const;

  double hr(double t, double r) const;  // Sobolev norm of the snapshot
};

}  // namespace gevlab::flows
