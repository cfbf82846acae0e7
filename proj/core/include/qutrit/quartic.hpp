#pragma once

#include <array>

#include "qutrit/types.hpp"

namespace qutrit {

enum class RootPattern {
  /// u1 > 0 > u3 real, u2 = conj(u4) with Im(u2) < 0.
  TwoRealConjugatePair,
  FourReal,
  TwoConjugatePairs,
};

/// Roots of the band-edge characteristic quartic
///
///   x^4 + alpha x^3 + 2 delta x^2 + alpha delta x - (Omega^2 - delta^2) = 0
///
/// obtained through the Ferrari resolvent cubic
///   r^3 - eta1 r^2 + eta2 r + eta3 = 0
/// and the factorisation
///   (x^2 + 2 sigma1 x + r/2 - E)(x^2 + 2 sigma2 x + r/2 + E).
///
/// Roots are stored as u[0..3] = (u1, u2, u3, u4). For the two-real pattern
/// u1 is the positive real root, u3 the negative one and u2 = conj(u4) lies
/// in the lower half plane. Other patterns are ordered by real part.
struct QuarticRootSet {
  std::array<Complex, 4> u{};
  RootPattern pattern = RootPattern::TwoRealConjugatePair;

  double alpha = 1.0;
  double delta = 0.0;
  double omega = 0.0;

  // Intermediate quantities of the closed form, on the selected branches.
  Complex sigma1, sigma2, bigE, r, bigM, bigP, q;
  double eta1 = 0.0, eta2 = 0.0, eta3 = 0.0;

  /// Smallest pairwise distance between roots.
  double min_separation = 0.0;

  /// Quartic polynomial evaluated at x.
  Complex polynomial(Complex x) const;
  /// max_j |P(u_j)| / max(1, |Omega^2 - delta^2|).
  double max_residual() const;
};

/// Coincidence distance below which roots count as repeated.
inline constexpr double kDegenerateRootTol = 1e-9;

/// Closed-form roots without the degeneracy check.
QuarticRootSet solve_quartic(double alpha, double delta, double omega);

/// Closed-form roots. Throws DegenerateRoots when two roots coincide within
/// kDegenerateRootTol.
QuarticRootSet quartic_roots(double alpha, double delta, double omega);

}  // namespace qutrit
