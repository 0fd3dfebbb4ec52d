#ifndef FOCH_GRID_HPP
#define FOCH_GRID_HPP

#include <cmath>
#include <stdexcept>

namespace foch {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Uniform periodic sampling grid on [0, length) with n points, n a power of two.
struct Grid1D {
  double length = kTwoPi;
  int n = 0;
  double dx = 0.0;

  static Grid1D make(double length, int n) {
    if (!(length > 0.0) || !std::isfinite(length))
      throw std::invalid_argument("Grid1D: domain length must be positive and finite");
    if (n < 16 || (n & (n - 1)) != 0)
      throw std::invalid_argument("Grid1D: point count must be a power of two >= 16");
    Grid1D g;
    g.length = length;
    g.n = n;
    g.dx = length / n;
    return g;
  }

  double point(int i) const { return i * dx; }

  // k_m = 2*pi*m/length for integer mode m in [0, n/2]
  double wavenumber(int m) const { return kTwoPi * m / length; }

  int modes() const { return n / 2 + 1; }
  double nyquist() const { return wavenumber(n / 2); }

  bool operator==(const Grid1D& o) const { return n == o.n && length == o.length; }
  bool operator!=(const Grid1D& o) const { return !(*this == o); }
};

}  // namespace foch

#endif
