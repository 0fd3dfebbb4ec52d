#ifndef FOCH_LITTLEWOOD_PALEY_HPP
#define FOCH_LITTLEWOOD_PALEY_HPP

// Concrete Littlewood-Paley machinery on the periodic grid: the (chi, phi)
// cutoff pair, dyadic blocks, Besov norms, the weighted sup norm, Bony
// paraproducts and commutator blocks.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "foch/spectral_ops.hpp"

namespace foch {

namespace detail {

// C^infinity transition: 1 for t <= 0, 0 for t >= 1, strictly monotone between.
inline double bump_h(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

inline double smooth_step(double t) {
  if (t <= 0.0) return 1.0;
  if (t >= 1.0) return 0.0;
  const double a = bump_h(t);
  const double b = bump_h(1.0 - t);
  return b / (a + b);
}

}  // namespace detail

/// The concrete dyadic cutoff pair: chi has plateau |xi| <= 1 and support
/// |xi| <= 4/3; phi(xi) = chi(xi/2) - chi(xi) is supported in 1 <= |xi| <= 8/3.
/// Telescoping: chi(xi) + sum_{0<=j<=J} phi(2^-j xi) = chi(2^-(J+1) xi) exactly.
struct DyadicPartition {
  double chi(double xi) const { return detail::smooth_step(3.0 * std::abs(xi) - 3.0); }
  double phi(double xi) const { return chi(xi / 2.0) - chi(xi); }

  // Largest block whose support (8/3)*2^j stays strictly below the grid's
  // Nyquist wavenumber. Equals log2(n/2) - 2 on the 2*pi box.
  int j_max(const Grid1D& g) const {
    int j = -1;
    while ((8.0 / 3.0) * std::ldexp(1.0, j + 1) < g.nyquist()) ++j;
    return j;
  }
};

inline const DyadicPartition& standard_partition() {
  static const DyadicPartition p;
  return p;
}

inline DyadicPartition build_partition() { return DyadicPartition{}; }

namespace detail {

inline SpectralField block_spectrum(const SpectralField& s, int j) {
  const DyadicPartition& P = standard_partition();
  SpectralField out(s.grid);
  if (j <= -2) return out;
  const double scale = std::ldexp(1.0, -j);
  for (int m = 0; m < s.modes(); ++m) {
    const double k = s.grid.wavenumber(m);
    const double w = (j == -1) ? P.chi(k) : P.phi(scale * k);
    out.c[static_cast<std::size_t>(m)] = w * s.c[static_cast<std::size_t>(m)];
  }
  return out;
}

}  // namespace detail

/// Delta_j f: the dyadic block at scale 2^j (j = -1 is the chi low cut;
/// j <= -2 is the zero field).
inline RealField block(const RealField& f, int j) {
  if (j > standard_partition().j_max(f.grid))
    throw std::invalid_argument("block: j beyond the grid's representable blocks");
  if (j <= -2) return RealField::zero(f.grid);
  return synthesize(detail::block_spectrum(analyze(f), j));
}

/// S_j f = sum_{j' <= j-1} Delta_j' f; equals the chi(2^-j .) multiplier for
/// j >= 0 and the zero field for j <= -1.
inline RealField low_pass(const RealField& f, int j) {
  if (j <= -1) return RealField::zero(f.grid);
  const DyadicPartition& P = standard_partition();
  const double scale = std::ldexp(1.0, -j);
  return apply_symbol(f, [&](double k) { return P.chi(scale * k); });
}

struct BesovIndex {
  double s = 0.0;
  double p = 2.0;
  double r = 2.0;

  BesovIndex(double s_, double p_, double r_) : s(s_), p(p_), r(r_) {
    if (!(p >= 1.0) || !(r >= 1.0))
      throw std::invalid_argument("BesovIndex: p and r must be >= 1 (or infinity)");
  }
};

/// B^s_{p,r} norm: finite l^r sum/sup of 2^{js} ||Delta_j f||_{L^p} over the
/// grid-representable blocks j in [-1, j_max].
inline double besov_norm(const RealField& f, const BesovIndex& idx) {
  const SpectralField s = analyze(f);
  const int jm = standard_partition().j_max(f.grid);
  double acc = 0.0;
  double sup = 0.0;
  for (int j = -1; j <= jm; ++j) {
    const RealField bj = synthesize(detail::block_spectrum(s, j));
    const double w = std::pow(2.0, idx.s * j) * norm_lp(bj, idx.p);
    if (std::isinf(idx.r)) sup = std::max(sup, w);
    else acc += std::pow(w, idx.r);
  }
  return std::isinf(idx.r) ? sup : std::pow(acc, 1.0 / idx.r);
}

/// sup_j (j+2)^{1+1/100} ||Delta_j f||_{L^inf} over representable blocks.
inline double weighted_sup_norm(const RealField& f) {
  const SpectralField s = analyze(f);
  const int jm = standard_partition().j_max(f.grid);
  double sup = 0.0;
  for (int j = -1; j <= jm; ++j) {
    const RealField bj = synthesize(detail::block_spectrum(s, j));
    sup = std::max(sup, std::pow(j + 2.0, 1.01) * norm_lp(bj, kInf));
  }
  return sup;
}

struct BonyParts {
  RealField Tfg;  // paraproduct of g by f (f low, g high)
  RealField Tgf;  // paraproduct of f by g
  RealField R;    // resonance remainder, |j-k| <= 1
};

/// Bony decomposition f*g = T_f g + T_g f + R(f,g), truncated at j_max.
inline BonyParts bony_decompose(const RealField& f, const RealField& g) {
  require_same_grid(f, g, "bony_decompose");
  const int jm = standard_partition().j_max(f.grid);
  const SpectralField sf = analyze(f);
  const SpectralField sg = analyze(g);

  std::vector<RealField> bf, bg;
  for (int j = -1; j <= jm; ++j) {
    bf.push_back(synthesize(detail::block_spectrum(sf, j)));
    bg.push_back(synthesize(detail::block_spectrum(sg, j)));
  }
  const auto blk = [&](const std::vector<RealField>& b, int j) -> const RealField& {
    return b[static_cast<std::size_t>(j + 1)];
  };

  BonyParts parts{RealField::zero(f.grid), RealField::zero(f.grid), RealField::zero(f.grid)};
  for (int j = 1; j <= jm; ++j) {
    parts.Tfg += multiply_dealiased(low_pass(f, j - 1), blk(bg, j));
    parts.Tgf += multiply_dealiased(low_pass(g, j - 1), blk(bf, j));
  }
  for (int k = -1; k <= jm; ++k)
    for (int j = std::max(-1, k - 1); j <= std::min(jm, k + 1); ++j)
      parts.R += multiply_dealiased(blk(bf, k), blk(bg, j));
  return parts;
}

/// Commutator block R_j = f Delta_j g_x - Delta_j (f g_x) = [f, Delta_j] d_x g.
inline RealField commutator_block(const RealField& f, const RealField& g, int j) {
  require_same_grid(f, g, "commutator_block");
  const RealField gx = derivative(g, 1);
  return multiply_dealiased(f, block(gx, j)) - block(multiply_dealiased(f, gx), j);
}

}  // namespace foch

#endif
