#ifndef FOCH_SPECTRAL_OPS_HPP
#define FOCH_SPECTRAL_OPS_HPP

// Periodic pseudospectral substrate: transforms, differentiation, Fourier
// multipliers, dealiased products, off-grid evaluation and L^p norms.

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "foch/fft.hpp"
#include "foch/field.hpp"

namespace foch {

inline SpectralField analyze(const RealField& f) {
  SpectralField s(f.grid);
  detail::FftEngine::get(f.grid.n).forward(f.v.data(), s.c.data());
  return s;
}

inline RealField synthesize(const SpectralField& s) {
  RealField f(s.grid);
  detail::FftEngine::get(s.grid.n).inverse(s.c.data(), f.v.data());
  return f;
}

namespace detail {

// Re-expand a half-spectrum onto a finer grid (same box). The merged Nyquist
// coefficient splits into +/- halves when it stops being the top mode.
inline SpectralField pad_spectrum(const SpectralField& s, const Grid1D& fine) {
  SpectralField out(fine);
  const int half = s.grid.n / 2;
  for (int m = 0; m < half; ++m) out.c[static_cast<std::size_t>(m)] = s.c[static_cast<std::size_t>(m)];
  out.c[static_cast<std::size_t>(half)] = 0.5 * s.c[static_cast<std::size_t>(half)];
  return out;
}

// Project a half-spectrum back onto a coarser grid. Modes above the coarse
// Nyquist are discarded; the +/-Nyquist pair re-merges (cosine part only,
// the sine component is not representable on the coarse grid).
inline SpectralField truncate_spectrum(const SpectralField& s, const Grid1D& coarse) {
  SpectralField out(coarse);
  const int half = coarse.n / 2;
  for (int m = 0; m < half; ++m) out.c[static_cast<std::size_t>(m)] = s.c[static_cast<std::size_t>(m)];
  out.c[static_cast<std::size_t>(half)] = {2.0 * s.c[static_cast<std::size_t>(half)].real(), 0.0};
  return out;
}

}  // namespace detail

/// Trigonometric interpolation of f onto a grid refined by `factor` (power of two).
inline RealField upsample(const RealField& f, int factor) {
  if (factor < 1 || (factor & (factor - 1)) != 0)
    throw std::invalid_argument("upsample: factor must be a power of two >= 1");
  if (factor == 1) return f;
  const Grid1D fine = Grid1D::make(f.grid.length, f.grid.n * factor);
  return synthesize(detail::pad_spectrum(analyze(f), fine));
}

/// Spectral derivative of order 0..4. Odd orders zero the Nyquist mode so the
/// result stays real and reflection-symmetric.
inline RealField derivative(const RealField& f, int order) {
  if (order < 0 || order > 4)
    throw std::invalid_argument("derivative: order must be in [0, 4]");
  if (order == 0) return f;
  SpectralField s = analyze(f);
  const int half = f.grid.n / 2;
  for (int m = 0; m <= half; ++m) {
    const std::complex<double> ik(0.0, f.grid.wavenumber(m));
    std::complex<double> sym = ik;
    for (int p = 1; p < order; ++p) sym *= ik;
    s.c[static_cast<std::size_t>(m)] *= sym;
  }
  if (order % 2 == 1) s.c[static_cast<std::size_t>(half)] = {0.0, 0.0};
  return synthesize(s);
}

/// Apply the Fourier multiplier sigma(k) coefficient-wise. sigma is evaluated on
/// the grid's nonnegative wavenumbers; an even symbol is implied by the real
/// half-spectrum representation, and the output is real.
inline RealField apply_symbol(const RealField& f, const std::function<double(double)>& sigma) {
  SpectralField s = analyze(f);
  for (int m = 0; m < s.modes(); ++m) {
    const double val = sigma(f.grid.wavenumber(m));
    if (!std::isfinite(val))
      throw std::invalid_argument("apply_symbol: symbol is not finite on a grid wavenumber");
    s.c[static_cast<std::size_t>(m)] *= val;
  }
  return synthesize(s);
}

/// Pointwise product computed with 3/2 zero padding, so the retained modes
/// (|m| <= n/2) are free of quadratic aliasing for band-limited inputs.
inline RealField multiply_dealiased(const RealField& f, const RealField& g) {
  require_same_grid(f, g, "multiply_dealiased");
  // 3n/2 is not a power of two, so the padded grid bypasses Grid1D::make.
  Grid1D padded;
  padded.length = f.grid.length;
  padded.n = (3 * f.grid.n) / 2;
  padded.dx = padded.length / padded.n;
  const RealField fp = synthesize(detail::pad_spectrum(analyze(f), padded));
  const RealField gp = synthesize(detail::pad_spectrum(analyze(g), padded));
  RealField prod(padded);
  for (int i = 0; i < padded.n; ++i) prod[i] = fp[i] * gp[i];
  return synthesize(detail::truncate_spectrum(analyze(prod), f.grid));
}

/// Evaluate the trigonometric interpolant of f at arbitrary points (wrapped
/// into [0, length)). Direct Fourier summation; exact for band-limited data.
inline std::vector<double> eval_at(const RealField& f, std::span<const double> points) {
  const SpectralField s = analyze(f);
  const int half = f.grid.n / 2;
  std::vector<double> out(points.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    double x = points[p];
    if (!std::isfinite(x)) throw std::invalid_argument("eval_at: non-finite point");
    x -= f.grid.length * std::floor(x / f.grid.length);
    const double theta = kTwoPi * x / f.grid.length;
    double acc = s.c[0].real();
    const std::complex<double> step = std::polar(1.0, theta);
    std::complex<double> rot = step;  // holds exp(i*theta*m) at loop entry
    for (int m = 1; m < half; ++m) {
      if ((m & 511) == 0) rot = std::polar(1.0, theta * m);  // bound rotation drift
      acc += 2.0 * (s.c[static_cast<std::size_t>(m)] * rot).real();
      rot *= step;
    }
    // merged Nyquist: cosine component only
    acc += (s.c[static_cast<std::size_t>(half)] * std::polar(1.0, theta * half)).real();
    out[p] = acc;
  }
  return out;
}

inline double eval_at_one(const RealField& f, double x) {
  const double pts[1] = {x};
  return eval_at(f, std::span<const double>(pts, 1))[0];
}

/// L^p norm by rectangle-rule quadrature; p = infinity refines the grid max by
/// 4x trigonometric upsampling (grid max alone under-reads between nodes).
inline double norm_lp(const RealField& f, double p) {
  if (std::isinf(p)) return upsample(f, 4).max_abs();
  if (!(p >= 1.0)) throw std::invalid_argument("norm_lp: p must be >= 1 or infinity");
  double acc = 0.0;
  for (double x : f.v) acc += std::pow(std::abs(x), p);
  return std::pow(acc * f.grid.dx, 1.0 / p);
}

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace foch

#endif
