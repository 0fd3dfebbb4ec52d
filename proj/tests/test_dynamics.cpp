#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "foch/dynamics.hpp"
#include "test_helpers.hpp"

using namespace foch;

namespace {

// Implicit characteristic solution of Burgers: u(t,x) = u0(xi), xi + t u0(xi) = x.
double burgers_oracle(const std::function<double(double)>& u0, const std::function<double(double)>& u0p,
                      double t, double x) {
  double xi = x;
  for (int it = 0; it < 100; ++it) {
    const double r = xi + t * u0(xi) - x;
    const double dr = 1.0 + t * u0p(xi);
    const double step = r / dr;
    xi -= step;
    if (std::abs(step) < 1e-14) break;
  }
  return u0(xi);
}

}  // namespace

TEST_CASE("constants are exact solutions of the evolution") {
  const Grid1D g = Grid1D::make(kTwoPi, 64);
  const FochParams par(1.0, 1.0, 2.0);
  StepController ctrl;
  ctrl.t_end = 1.0;
  const Trajectory traj = integrate(RealField::constant(g, 0.8), par, ctrl);
  CHECK(traj.termination == Termination::reached_t_end);
  CHECK(max_abs_diff(traj.last().u, RealField::constant(g, 0.8)) < 1e-12);
  CHECK(traj.last().t == Catch::Approx(1.0));
}

TEST_CASE("solution converges at 4th order against the refined oracle") {
  const FochParams par(1.0, 1.0, 2.0);
  StepController ctrl;
  ctrl.t_end = 0.2;
  ctrl.store_snapshots = true;
  ctrl.snapshot_stride = 1 << 20;  // only first/last

  const auto u0fn = [](double x) { return 0.1 * std::sin(x); };
  const Grid1D g1 = Grid1D::make(kTwoPi, 256);
  const Grid1D g2 = Grid1D::make(kTwoPi, 512);

  const Trajectory coarse = integrate(RealField::sample(g1, u0fn), par, ctrl);
  StepController fine = ctrl;
  fine.cfl = ctrl.cfl / 2;  // refined grid already halves dt; this halves again
  const Trajectory oracle = integrate(RealField::sample(g2, u0fn), par, fine);

  double err = 0.0;
  for (int i = 0; i < g1.n; ++i)
    err = std::max(err, std::abs(coarse.last().u[i] - oracle.last().u[2 * i]));
  CHECK(err < 1e-7);
}

TEST_CASE("Burgers mode reproduces the characteristic solution") {
  const Grid1D g = Grid1D::make(kTwoPi, 256);
  const FochParams par(1.0, 1.0, 2.0);
  StepController ctrl;
  ctrl.t_end = 1.0;  // shock time is 1/0.2 = 5
  const auto u0 = [](double x) { return 0.2 * std::sin(x); };
  const auto u0p = [](double x) { return 0.2 * std::cos(x); };

  const Trajectory traj = integrate(RealField::sample(g, u0), par, ctrl, {}, /*disable_F=*/true);
  double err = 0.0;
  for (int i = 0; i < g.n; ++i)
    err = std::max(err, std::abs(traj.last().u[i] - burgers_oracle(u0, u0p, ctrl.t_end, g.point(i))));
  CHECK(err < 1e-6);
}

TEST_CASE("blow-up flag and dt underflow are reported, not thrown") {
  const Grid1D g = Grid1D::make(kTwoPi, 128);
  const FochParams par(1.0, 1.0, 2.0);

  StepController steep;
  steep.t_end = 10.0;
  steep.blow_threshold = 1.0;  // 0.5 sin has |u_x| = 0.5; steepening crosses 1 quickly in Burgers mode
  const RealField u0 = RealField::sample(g, [](double x) { return 0.5 * std::sin(x); });
  const Trajectory t1 = integrate(u0, par, steep, {}, true);
  CHECK(t1.termination == Termination::blow_up_flag);
  CHECK(t1.times.back() < steep.t_end);

  StepController coarse;
  coarse.t_end = 1.0;
  coarse.dt_min = 1.0;  // unreachable
  const Trajectory t2 = integrate(u0, par, coarse);
  CHECK(t2.termination == Termination::dt_underflow);
}

TEST_CASE("transport: trivial coefficients") {
  const Grid1D g = Grid1D::make(kTwoPi, 128);
  const RealField f0 = RealField::sample(g, [](double x) { return std::sin(x); });
  const RealField zero = RealField::zero(g);

  const TimeField none = TimeField::constant(zero, 1.0);
  const TimeField h1 = transport_solve(none, none, f0, 1.0, 32);
  CHECK(max_abs_diff(h1.fields.back(), f0) < 1e-13);

  const TimeField ones = TimeField::constant(RealField::constant(g, 1.0), 1.0);
  const TimeField h2 = transport_solve(ones, none, f0, 1.0, 200);
  const RealField want = RealField::sample(g, [](double x) { return std::sin(x - 1.0); });
  CHECK(max_abs_diff(h2.fields.back(), want) < 1e-8);

  const RealField c = RealField::constant(g, 2.0);
  const TimeField h3 = transport_solve(ones, none, c, 1.0, 32);
  CHECK(max_abs_diff(h3.fields.back(), c) < 1e-13);
}

TEST_CASE("picard: zero data converges immediately") {
  const Grid1D g = Grid1D::make(kTwoPi, 64);
  const FochParams par(1.0, 1.0, 2.0);
  const PicardResult res = picard_solve(RealField::zero(g), par, 0.1, 1e-10, 10);
  CHECK(res.converged);
  CHECK(res.iterations == 1);
  CHECK(res.fixed_point.max_abs() == 0.0);
}

TEST_CASE("picard contracts and agrees with the method of lines") {
  const Grid1D g = Grid1D::make(kTwoPi, 128);
  const FochParams par(1.0, 1.0, 2.0);
  const RealField u0 = RealField::sample(g, [](double x) { return 0.1 * std::sin(x); });
  const double t_end = 0.05;

  const PicardResult res = picard_solve(u0, par, t_end, 1e-9, 25);
  CHECK(res.converged);
  REQUIRE(res.distances.size() >= 4);
  for (std::size_t i = 3; i < res.distances.size() - 1; ++i) {
    if (res.distances[i] < 1e-12) break;  // at the floor
    CHECK(res.distances[i + 1] / res.distances[i] < 0.7);
  }

  StepController ctrl;
  ctrl.t_end = t_end;
  const Trajectory mol = integrate(u0, par, ctrl);
  const double dist = besov_norm(res.fixed_point - mol.last().u, BesovIndex(2, 2, 2));
  CHECK(dist < 1e-5);
}
