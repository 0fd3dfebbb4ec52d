#ifndef FOCH_DYNAMICS_HPP
#define FOCH_DYNAMICS_HPP

// Time evolution: RK4 method-of-lines for the full model, the linear
// transport solver, and the Picard iteration with low-passed initial data.

#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "foch/littlewood_paley.hpp"
#include "foch/model.hpp"
#include "foch/series.hpp"
#include "foch/spectral_ops.hpp"

namespace foch {

struct StepController {
  double cfl = 0.3;               // dt = cfl * dx / max(1, |u|_inf)
  double dt_min = 1e-10;
  double t_end = 1.0;
  double blow_threshold = 1e4;    // on |u_x|_inf
  int snapshot_stride = 1;
  bool store_snapshots = true;
};

enum class Termination { reached_t_end, blow_up_flag, dt_underflow };

inline const char* to_string(Termination t) {
  switch (t) {
    case Termination::reached_t_end: return "reached_t_end";
    case Termination::blow_up_flag: return "blow_up_flag";
    default: return "dt_underflow";
  }
}

struct Snapshot {
  int step;
  double t;
  RealField u;
};

struct Trajectory {
  std::vector<double> times;            // every accepted step, starting at 0
  std::vector<Snapshot> snapshots;      // strided, always includes first and last
  std::vector<DiagnosticSeries> series; // harvested from the hooks
  Termination termination = Termination::reached_t_end;
  FochParams params;

  const Snapshot& last() const { return snapshots.back(); }
};

struct StepRecord {
  int step;
  double t;
  const RealField& u;
  double ux_inf;      // canonical upsampled L^inf of u_x
  bool is_snapshot;
};

/// Diagnostic hook invoked synchronously on every accepted step (blow-up
/// termination needs the live value, so these are not post-processing).
class Monitor {
 public:
  virtual ~Monitor() = default;
  virtual void observe(const StepRecord& rec, const FochParams& par) = 0;
  virtual DiagnosticSeries series() const = 0;
};

/// Classical RK4 on du/dt = rhs(u) with an advective CFL time step.
inline Trajectory integrate(const RealField& u0, const FochParams& par,
                            const StepController& ctrl,
                            const std::vector<Monitor*>& hooks = {},
                            bool disable_F = false) {
  if (!u0.all_finite()) throw std::invalid_argument("integrate: non-finite initial data");
  Trajectory traj;
  traj.params = par;

  RealField u = u0;
  double t = 0.0;
  int step = 0;

  const auto record = [&](bool force_snapshot) {
    const bool snap = force_snapshot || (step % ctrl.snapshot_stride == 0);
    const double ux_inf = norm_lp(derivative(u, 1), kInf);
    StepRecord rec{step, t, u, ux_inf, snap};
    for (Monitor* h : hooks) h->observe(rec, par);
    traj.times.push_back(t);
    if (snap && ctrl.store_snapshots) traj.snapshots.push_back({step, t, u});
    return ux_inf;
  };

  double ux_inf = record(true);

  while (t < ctrl.t_end) {
    if (ux_inf > ctrl.blow_threshold) {
      traj.termination = Termination::blow_up_flag;
      break;
    }
    double dt = ctrl.cfl * u.grid.dx / std::max(1.0, u.max_abs());
    if (dt < ctrl.dt_min) {
      traj.termination = Termination::dt_underflow;
      break;
    }
    bool final_step = false;
    if (t + dt >= ctrl.t_end) {
      dt = ctrl.t_end - t;
      final_step = true;
    }

    const RealField k1 = rhs(u, par, disable_F);
    const RealField k2 = rhs(u + (0.5 * dt) * k1, par, disable_F);
    const RealField k3 = rhs(u + (0.5 * dt) * k2, par, disable_F);
    const RealField k4 = rhs(u + dt * k3, par, disable_F);
    RealField du = k1;
    du += 2.0 * k2;
    du += 2.0 * k3;
    du += k4;
    u += (dt / 6.0) * du;

    t = final_step ? ctrl.t_end : t + dt;
    ++step;
    ux_inf = record(final_step);
    if (!u.all_finite()) {
      traj.termination = Termination::blow_up_flag;
      break;
    }
  }

  if (ctrl.store_snapshots && (traj.snapshots.empty() || traj.snapshots.back().step != step))
    traj.snapshots.push_back({step, t, u});
  for (Monitor* h : hooks) traj.series.push_back(h->series());
  return traj;
}

/// A field sampled on a time grid, reconstructed linearly in time between
/// samples (the Picard scheme freezes coefficients this way).
struct TimeField {
  std::vector<double> times;
  std::vector<RealField> fields;

  RealField sample(double t) const {
    if (times.empty()) throw std::runtime_error("TimeField: empty");
    if (t <= times.front()) return fields.front();
    if (t >= times.back()) return fields.back();
    std::size_t hi = 1;
    while (times[hi] < t) ++hi;
    const double w = (t - times[hi - 1]) / (times[hi] - times[hi - 1]);
    RealField out = (1.0 - w) * fields[hi - 1];
    out += w * fields[hi];
    return out;
  }

  static TimeField constant(const RealField& f, double t_end) {
    return TimeField{{0.0, t_end}, {f, f}};
  }
};

/// RK4 for the linear transport problem df/dt = -v f_x + g with time-frozen
/// coefficients looked up from the sampled histories.
inline TimeField transport_solve(const TimeField& v, const TimeField& g, const RealField& f0,
                                 double t_end, int steps) {
  if (steps < 1) throw std::invalid_argument("transport_solve: need at least one step");
  const double dt = t_end / steps;
  TimeField hist;
  hist.times.push_back(0.0);
  hist.fields.push_back(f0);

  RealField f = f0;
  const auto rate = [&](const RealField& fld, double tau) {
    RealField out = (-1.0) * multiply_dealiased(v.sample(tau), derivative(fld, 1));
    out += g.sample(tau);
    return out;
  };
  for (int s = 0; s < steps; ++s) {
    const double t = s * dt;
    const RealField k1 = rate(f, t);
    const RealField k2 = rate(f + (0.5 * dt) * k1, t + 0.5 * dt);
    const RealField k3 = rate(f + (0.5 * dt) * k2, t + 0.5 * dt);
    const RealField k4 = rate(f + dt * k3, t + dt);
    RealField df = k1;
    df += 2.0 * k2;
    df += 2.0 * k3;
    df += k4;
    f += (dt / 6.0) * df;
    hist.times.push_back((s + 1) * dt);
    hist.fields.push_back(f);
  }
  return hist;
}

struct PicardResult {
  RealField fixed_point;            // iterate at t_end
  TimeField history;                // full history of the last iterate
  std::vector<double> distances;    // successive-iterate distances
  bool converged = false;
  int iterations = 0;
};

/// The existence-proof iteration: each iterate solves the linear transport
/// problem with the previous iterate as velocity and source, initial data
/// low-passed to S_{n+1} u0. Stops when the discrete B^{s-1}_{2,2} distance
/// between successive iterates drops below tol.
inline PicardResult picard_solve(const RealField& u0, const FochParams& par, double t_end,
                                 double tol, int n_max, double s = 3.0, int steps = 64) {
  PicardResult res;
  const BesovIndex dist_idx(s - 1.0, 2, 2);

  TimeField prev = TimeField::constant(RealField::zero(u0.grid), t_end);  // u^0 = 0
  const double dt = t_end / steps;

  for (int n = 0; n < n_max; ++n) {
    // freeze F(u^n) on the history grid and reconstruct linearly in time
    TimeField source;
    for (int k = 0; k <= steps; ++k) {
      const double tk = k * dt;
      source.times.push_back(tk);
      source.fields.push_back((-1.0) * f_terms(prev.sample(tk), par).sum());
    }
    const RealField init = low_pass(u0, n + 1);  // S_{n+1} u0
    TimeField next = transport_solve(prev, source, init, t_end, steps);

    double dist = 0.0;
    for (int k = 0; k <= steps; ++k)
      dist = std::max(dist, besov_norm(next.fields[static_cast<std::size_t>(k)] -
                                           prev.sample(next.times[static_cast<std::size_t>(k)]),
                                       dist_idx));
    res.distances.push_back(dist);
    res.iterations = n + 1;
    prev = std::move(next);
    if (dist < tol) {
      res.converged = true;
      break;
    }
  }
  res.fixed_point = prev.fields.back();
  res.history = std::move(prev);
  return res;
}

}  // namespace foch

#endif
