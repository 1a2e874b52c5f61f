#include "gevlab/radius.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "gevlab/csv.hpp"

namespace gevlab::radius {

void RadiusParams::validate() const {
  if (!(C > 0)) throw std::invalid_argument("RadiusParams: C must be positive");
  if (!(s >= 1)) throw std::invalid_argument("RadiusParams: s must be >= 1");
  if (!(r > 4.5)) throw std::invalid_argument("RadiusParams: r must exceed 9/2");
  if (!(tau0 > 0)) throw std::invalid_argument("RadiusParams: tau0 must be positive");
  if (u0_hr < 0 || u0_x < 0) throw std::invalid_argument("RadiusParams: negative norm");
}

void accumulate(Trajectory& traj, const RadiusParams& p) {
  p.validate();
  const auto& s = traj.samples;
  if (s.empty()) throw std::invalid_argument("accumulate: empty trajectory");
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!(s[i].t > s[i - 1].t)) throw std::invalid_argument("accumulate: time must increase");

  traj.log_G.assign(s.size(), 0.0);
  traj.M.assign(s.size(), p.u0_x);
  double ig = 0, im = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const double dt = s[i].t - s[i - 1].t;
    ig += 0.5 * dt * (s[i].grad_sup + s[i - 1].grad_sup);
    im += 0.5 * dt * (s[i].hr * s[i].hr + s[i - 1].hr * s[i - 1].hr);
    traj.log_G[i] = p.C * ig;
    traj.M[i] = p.u0_x + p.c_tau0() * im;
  }
}

std::vector<double> integrate_tau_ode(const Trajectory& traj, const RadiusParams& p, int substeps) {
  p.validate();
  if (traj.log_G.size() != traj.samples.size())
    throw std::invalid_argument("integrate_tau_ode: run accumulate first");
  if (substeps < 1) throw std::invalid_argument("integrate_tau_ode: substeps >= 1");

  const auto& s = traj.samples;
  auto interp = [&](double t, auto&& value) {
    if (t <= s.front().t) return value(std::size_t{0});
    if (t >= s.back().t) return value(s.size() - 1);
    std::size_t hi = 1;
    while (s[hi].t < t) ++hi;
    const double w = (t - s[hi - 1].t) / (s[hi].t - s[hi - 1].t);
    return (1 - w) * value(hi - 1) + w * value(hi);
  };

  // y = log tau: y' = -(a(t) + b(t) exp(y/2)),
  // a = C grad_sup, b = C (C' hr + M)
  auto f = [&](double t, double y) {
    const double g = interp(t, [&](std::size_t i) { return s[i].grad_sup; });
    const double h = interp(t, [&](std::size_t i) { return s[i].hr; });
    const double m = interp(t, [&](std::size_t i) { return traj.M[i]; });
    const double a = p.C * g;
    const double b = p.C * (p.c_tau0_prime() * h + m);
    return -(a + b * std::exp(0.5 * y));
  };

  std::vector<double> tau(s.size());
  double y = std::log(p.tau0);
  tau[0] = p.tau0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const double h = (s[i].t - s[i - 1].t) / substeps;
    double t = s[i - 1].t;
    for (int k = 0; k < substeps; ++k) {
      const double k1 = f(t, y);
      const double k2 = f(t + 0.5 * h, y + 0.5 * h * k1);
      const double k3 = f(t + 0.5 * h, y + 0.5 * h * k2);
      const double k4 = f(t + h, y + h * k3);
      y += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
      t += h;
    }
    tau[i] = std::exp(y);
    if (!(tau[i] >= 0))
      throw std::runtime_error("integrate_tau_ode: tau left the positive axis (step-size bug)");
  }
  return tau;
}

std::vector<double> tau_paper_series(const Trajectory& traj, const RadiusParams& p) {
  p.validate();
  const auto& s = traj.samples;
  std::vector<double> tau(s.size());
  double acc = 0;  // int (C' hr + M) G^{-1}
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) {
      const double dt = s[i].t - s[i - 1].t;
      auto integrand = [&](std::size_t j) {
        return (p.c_tau0_prime() * s[j].hr + traj.M[j]) * std::exp(-traj.log_G[j]);
      };
      acc += 0.5 * dt * (integrand(i) + integrand(i - 1));
    }
    const double inner = std::pow(p.tau0, -0.5) + p.C * acc;
    tau[i] = std::exp(-0.5 * traj.log_G[i]) * std::pow(inner, -0.5);
  }
  return tau;
}

LowerBound lower_bound_series(const Trajectory& traj, const RadiusParams& p) {
  p.validate();
  const auto& s = traj.samples;
  const double T = traj.t_final();
  // C0(1+t)^2 >= a + b t + c t^2 over [0, T], minimal C0; the quotient has at
  // most one interior critical point.
  const double a = std::pow(p.tau0, -0.5);
  const double b = p.C * (p.c_tau0_prime() * p.u0_hr + p.u0_x);
  const double c = p.C * p.c_tau0() * p.u0_hr * p.u0_hr / 2.0;
  auto q = [&](double t) { return (a + b * t + c * t * t) / ((1 + t) * (1 + t)); };
  double C0 = std::max(q(0.0), q(T));
  const double dnum = 2 * c - b;
  if (dnum != 0) {
    const double tstar = (2 * a - b) / dnum;
    if (tstar > 0 && tstar < T) C0 = std::max(C0, q(tstar));
  }
  LowerBound out;
  out.C0 = C0;
  out.tau.resize(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    out.tau[i] = std::exp(-0.5 * traj.log_G[i]) / (C0 * (1.0 + s[i].t));
  return out;
}

std::vector<double> condition2_residuals(const std::vector<double>& tau, const Trajectory& traj,
                                         const RadiusParams& p) {
  p.validate();
  const auto& s = traj.samples;
  if (s.size() < 3) throw std::invalid_argument("condition2_residuals: need at least 3 samples");
  if (tau.size() != s.size()) throw std::invalid_argument("condition2_residuals: size mismatch");

  // uniform spacing check decides the stencil order
  const double h0 = s[1].t - s[0].t;
  bool uniform = true;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (std::abs((s[i].t - s[i - 1].t) - h0) > 1e-9 * std::max(1.0, h0)) uniform = false;

  std::vector<double> out(s.size(), std::nan(""));
  const bool five = uniform && s.size() >= 5;
  const std::size_t lo = five ? 2 : 1;
  const std::size_t hi = s.size() - (five ? 2 : 1);
  for (std::size_t i = lo; i < hi; ++i) {
    double dtau;
    if (five) {
      dtau = (-tau[i + 2] + 8 * tau[i + 1] - 8 * tau[i - 1] + tau[i - 2]) / (12 * h0);
    } else {
      const double hl = s[i].t - s[i - 1].t, hu = s[i + 1].t - s[i].t;
      dtau = (tau[i + 1] - tau[i - 1]) / (hl + hu);
    }
    out[i] = dtau + p.C * tau[i] * s[i].grad_sup +
             p.C * std::pow(tau[i], 1.5) * (p.c_tau0_prime() * s[i].hr + traj.M[i]);
  }
  return out;
}

double check_condition2(const std::vector<double>& tau, const Trajectory& traj,
                        const RadiusParams& p) {
  double worst = -std::numeric_limits<double>::infinity();
  for (double r : condition2_residuals(tau, traj, p))
    if (!std::isnan(r)) worst = std::max(worst, r);
  return worst;
}

Trajectory build_trajectory(std::vector<Sample> samples, const RadiusParams& p, int ode_substeps) {
  Trajectory traj;
  traj.samples = std::move(samples);
  accumulate(traj, p);
  traj.tau_ode = integrate_tau_ode(traj, p, ode_substeps);
  traj.tau_paper = tau_paper_series(traj, p);
  LowerBound lb = lower_bound_series(traj, p);
  traj.tau_lower = std::move(lb.tau);
  traj.C0 = lb.C0;
  if (traj.samples.size() >= 3) {
    traj.cond2 = condition2_residuals(traj.tau_ode, traj, p);
    traj.cond2_residual_ode = check_condition2(traj.tau_ode, traj, p);
  } else {
    traj.cond2.assign(traj.samples.size(), std::nan(""));
  }
  return traj;
}

void write_trajectory_csv(const Trajectory& traj, const RadiusParams& p, const std::string& path) {
  CsvWriter w(path);
  w.header({"t", "grad_sup", "Hr", "G", "M", "tau_ode", "tau_paper", "tau_lower", "tau_measured",
            "cond2_residual"});
  for (std::size_t i = 0; i < traj.samples.size(); ++i) {
    const auto& s = traj.samples[i];
    w.field(s.t)
        .field(s.grad_sup)
        .field(s.hr)
        .field(std::exp(traj.log_G[i]))
        .field(traj.M[i])
        .field(traj.tau_ode[i])
        .field(traj.tau_paper[i])
        .field(traj.tau_lower[i])
        .field(s.tau_measured)
        .field(traj.cond2.empty() ? std::nan("") : traj.cond2[i]);
    w.end_row();
  }
  (void)p;
}

std::vector<Sample> read_samples_csv(const std::string& path) {
  CsvTable t = read_csv(path);
  const int it = t.column_index("t");
  const int ig = t.column_index("grad_sup");
  const int ih = t.column_index("Hr");
  int im = -1;
  try {
    im = t.column_index("tau_measured");
  } catch (const std::exception&) {
  }
  std::vector<Sample> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    Sample s;
    s.t = t.number(r, it);
    s.grad_sup = t.number(r, ig);
    s.hr = t.number(r, ih);
    if (im >= 0 && !t.rows[r][static_cast<std::size_t>(im)].empty()) s.tau_measured = t.number(r, im);
    out.push_back(s);
  }
  return out;
}

}  // namespace gevlab::radius
