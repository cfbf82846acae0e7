#include "qutrit/quartic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qutrit/errors.hpp"

namespace qutrit {

namespace {

Complex principal_cbrt(Complex z) {
  if (std::abs(z) == 0.0) return 0.0;
  return std::polar(std::cbrt(std::abs(z)), std::arg(z) / 3.0);
}

struct Candidate {
  std::array<Complex, 4> u;
  Complex sigma1, sigma2, bigE, r, bigM;
  double score = std::numeric_limits<double>::infinity();
};

bool is_real(Complex z) { return std::abs(z.imag()) <= 1e-9 * std::max(1.0, std::abs(z)); }

}  // namespace

Complex QuarticRootSet::polynomial(Complex x) const {
  const double k = omega * omega - delta * delta;
  return (((x + alpha) * x + 2 * delta) * x + alpha * delta) * x - k;
}

double QuarticRootSet::max_residual() const {
  const double scale = std::max(1.0, std::abs(omega * omega - delta * delta));
  double worst = 0.0;
  for (const Complex& root : u) worst = std::max(worst, std::abs(polynomial(root)));
  return worst / scale;
}

QuarticRootSet solve_quartic(double alpha, double delta, double omega) {
  QuarticRootSet set;
  set.alpha = alpha;
  set.delta = delta;
  set.omega = omega;

  const double k = omega * omega - delta * delta;
  set.eta1 = 2 * delta;
  set.eta2 = alpha * alpha * delta + 4 * k;
  set.eta3 = (alpha * alpha - 8 * delta) * k - alpha * alpha * delta * delta;

  const double eta1_3 = set.eta1 / 3;
  set.bigP = -set.eta1 * set.eta1 / 3 + set.eta2;
  set.q = -2 * eta1_3 * eta1_3 * eta1_3 + set.eta1 * set.eta2 / 3 + set.eta3;
  const Complex p3 = set.bigP / 3.0;
  const Complex m_squared = p3 * p3 * p3 + set.q * set.q / 4.0;

  // Every cube and square root in the closed form is two- or three-valued.
  // Enumerate all branch combinations and keep the one whose four values
  // best satisfy the quartic.
  const Complex cube_unit = std::polar(1.0, 2 * kPi / 3);
  Candidate best;
  for (int sign_m : {1, -1}) {
    const Complex m = static_cast<double>(sign_m) * std::sqrt(m_squared);
    const Complex c1 = principal_cbrt(m - set.q / 2.0);
    const Complex c2 = principal_cbrt(m + set.q / 2.0);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const Complex r = c1 * std::pow(cube_unit, i) - c2 * std::pow(cube_unit, j) + eta1_3;
        for (int sign_s : {1, -1}) {
          const Complex s = static_cast<double>(sign_s) * std::sqrt(alpha * alpha - 8 * delta + 4.0 * r);
          const Complex sigma1 = (alpha + s) / 4.0;
          const Complex sigma2 = (alpha - s) / 4.0;
          for (int sign_e : {1, -1}) {
            const Complex e = static_cast<double>(sign_e) * std::sqrt(r * r / 4.0 + k);
            const Complex d1 = std::sqrt(e - r / 2.0 + sigma1 * sigma1);
            const Complex d2 = std::sqrt(e + r / 2.0 - sigma2 * sigma2);
            Candidate c{{-sigma1 + d1, -sigma2 - kI * d2, -sigma1 - d1, -sigma2 + kI * d2}, sigma1, sigma2, e, r, m};
            c.score = 0.0;
            for (const Complex& root : c.u) c.score = std::max(c.score, std::abs(set.polynomial(root)));
            if (c.score < best.score) best = c;
          }
        }
      }
    }
  }

  set.sigma1 = best.sigma1;
  set.sigma2 = best.sigma2;
  set.bigE = best.bigE;
  set.r = best.r;
  set.bigM = best.bigM;

  // Newton polish against rounding in the nested radicals.
  std::array<Complex, 4> roots = best.u;
  for (Complex& x : roots) {
    for (int iter = 0; iter < 3; ++iter) {
      const Complex f = set.polynomial(x);
      const Complex df = ((4.0 * x + 3 * alpha) * x + 4 * delta) * x + alpha * delta;
      if (std::abs(df) == 0.0) break;
      const Complex next = x - f / df;
      if (!(std::abs(set.polynomial(next)) < std::abs(f))) break;
      x = next;
    }
  }

  std::array<Complex, 4> real_roots{}, complex_roots{};
  int n_real = 0, n_complex = 0;
  for (const Complex& x : roots) {
    if (is_real(x)) {
      real_roots[n_real++] = Complex(x.real(), 0.0);
    } else {
      complex_roots[n_complex++] = x;
    }
  }
  auto by_real_then_imag = [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() > b.real() : a.imag() < b.imag();
  };
  if (n_real == 2) {
    set.pattern = RootPattern::TwoRealConjugatePair;
    std::sort(real_roots.begin(), real_roots.begin() + 2, by_real_then_imag);
    Complex lower = complex_roots[0].imag() < 0 ? complex_roots[0] : complex_roots[1];
    Complex upper = complex_roots[0].imag() < 0 ? complex_roots[1] : complex_roots[0];
    // Enforce exact conjugate symmetry of the real-coefficient polynomial.
    lower = 0.5 * (lower + std::conj(upper));
    set.u = {real_roots[0], lower, real_roots[1], std::conj(lower)};
  } else {
    set.pattern = n_real == 4 ? RootPattern::FourReal : RootPattern::TwoConjugatePairs;
    std::array<Complex, 4> all = n_real == 4 ? real_roots : roots;
    std::sort(all.begin(), all.end(), by_real_then_imag);
    set.u = all;
  }

  set.min_separation = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) set.min_separation = std::min(set.min_separation, std::abs(set.u[i] - set.u[j]));
  return set;
}

QuarticRootSet quartic_roots(double alpha, double delta, double omega) {
  if (!(alpha > 0.0)) throw std::invalid_argument("quartic_roots: alpha must be positive");
  QuarticRootSet set = solve_quartic(alpha, delta, omega);
  if (set.min_separation < kDegenerateRootTol) {
    throw DegenerateRoots("quartic roots coincide (separation " + std::to_string(set.min_separation) +
                          ") at Omega=" + std::to_string(omega) + ", delta=" + std::to_string(delta));
  }
  return set;
}

}  // namespace qutrit
