#ifndef FOCH_FIELD_HPP
#define FOCH_FIELD_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "foch/grid.hpp"

namespace foch {

/// Real-valued function sampled on a Grid1D.
struct RealField {
  Grid1D grid;
  std::vector<double> v;

  RealField() = default;
  explicit RealField(const Grid1D& g) : grid(g), v(static_cast<std::size_t>(g.n), 0.0) {}

  static RealField zero(const Grid1D& g) { return RealField(g); }

  static RealField constant(const Grid1D& g, double c) {
    RealField f(g);
    std::fill(f.v.begin(), f.v.end(), c);
    return f;
  }

  static RealField sample(const Grid1D& g, const std::function<double(double)>& fn) {
    RealField f(g);
    for (int i = 0; i < g.n; ++i) f.v[static_cast<std::size_t>(i)] = fn(g.point(i));
    return f;
  }

  int size() const { return grid.n; }
  double operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return v[static_cast<std::size_t>(i)]; }

  bool all_finite() const {
    for (double x : v)
      if (!std::isfinite(x)) return false;
    return true;
  }

  double max_abs() const {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }
};

/// Discrete Fourier coefficients of a real field, half-spectrum m in [0, n/2].
/// Slot n/2 carries the merged +/-Nyquist coefficient.
struct SpectralField {
  Grid1D grid;
  std::vector<std::complex<double>> c;

  SpectralField() = default;
  explicit SpectralField(const Grid1D& g)
      : grid(g), c(static_cast<std::size_t>(g.modes()), {0.0, 0.0}) {}

  int modes() const { return grid.modes(); }
};

inline void require_same_grid(const RealField& a, const RealField& b, const char* who) {
  if (a.grid != b.grid)
    throw std::invalid_argument(std::string(who) + ": fields live on different grids");
}

inline RealField operator+(const RealField& a, const RealField& b) {
  require_same_grid(a, b, "operator+");
  RealField r(a.grid);
  for (int i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline RealField operator-(const RealField& a, const RealField& b) {
  require_same_grid(a, b, "operator-");
  RealField r(a.grid);
  for (int i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline RealField operator*(double s, const RealField& a) {
  RealField r(a.grid);
  for (int i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

inline RealField& operator+=(RealField& a, const RealField& b) {
  require_same_grid(a, b, "operator+=");
  for (int i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline double max_abs_diff(const RealField& a, const RealField& b) {
  require_same_grid(a, b, "max_abs_diff");
  double m = 0.0;
  for (int i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace foch

#endif
