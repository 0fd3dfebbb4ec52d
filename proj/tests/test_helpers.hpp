#ifndef FOCH_TEST_HELPERS_HPP
#define FOCH_TEST_HELPERS_HPP

#include <cmath>
#include <random>
#include <vector>

#include "foch/field.hpp"
#include "foch/grid.hpp"

namespace foch::testing {

struct Mode {
  int m;
  double a;  // cosine amplitude
  double b;  // sine amplitude
};

// Band-limited field from an explicit mode list; the same function is exactly
// representable on any grid with Nyquist above max_mode, which is what the
// grid-doubling stability checks rely on.
inline std::vector<Mode> random_modes(std::uint64_t seed, int max_mode, double amp = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Mode> modes;
  for (int m = 1; m <= max_mode; ++m) modes.push_back({m, amp * u(rng), amp * u(rng)});
  return modes;
}

inline RealField field_from_modes(const Grid1D& g, const std::vector<Mode>& modes) {
  RealField f(g);
  for (int i = 0; i < g.n; ++i) {
    const double x = g.point(i);
    double acc = 0.0;
    for (const auto& mo : modes)
      acc += mo.a * std::cos(mo.m * kTwoPi * x / g.length) +
             mo.b * std::sin(mo.m * kTwoPi * x / g.length);
    f[i] = acc;
  }
  return f;
}

// Direct trigonometric evaluation from the mode list (implementation-independent).
inline double eval_modes(const Grid1D& g, const std::vector<Mode>& modes, double x) {
  double acc = 0.0;
  for (const auto& mo : modes)
    acc += mo.a * std::cos(mo.m * kTwoPi * x / g.length) +
           mo.b * std::sin(mo.m * kTwoPi * x / g.length);
  return acc;
}

}  // namespace foch::testing

#endif
