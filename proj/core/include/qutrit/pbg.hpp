#pragma once

#include <span>
#include <vector>

#include "qutrit/quartic.hpp"
#include "qutrit/types.hpp"

namespace qutrit {

// Amplitudes near an anisotropic band edge.
//
// With s' = s + i delta the Laplace-domain amplitudes are
//
//   A~(s') = [s' A0 - i Omega B0] / D(s)
//   B~(s') = [(s' + alpha e^{i pi/4} sqrt(s)) B0 - i Omega A0] / D(s)
//   D(s)   = s'^2 + alpha e^{i pi/4} s' sqrt(s) + Omega^2
//          = prod_j (sqrt(s) - e^{i pi/4} u_j)
//
// where u_j are the quartic roots. Inverting gives a residue sum over the
// poles lying on the principal sheet of sqrt(s), plus a branch-cut integral
// along the negative real s axis.

/// One pole of the principal sheet, s = i u^2, contributing
/// p (Q3, Q2) e^{i(u^2 + delta) t} to (A, B).
struct ResiduePole {
  int root_index = 0;
  Complex u;
  /// p = 2u / prod_{k != j} (u - u_k)
  Complex p;
  /// Q3 = (u^2 + delta) A0 - Omega B0
  Complex q3;
  /// Q2 = (u^2 + alpha u + delta) B0 - Omega A0
  Complex q2;
  /// i (u^2 + delta)
  Complex exponent;
  /// True when the pole sits on the imaginary axis (does not decay).
  bool oscillatory = false;
};

struct ResidueTerms {
  std::vector<ResiduePole> poles;

  AmplitudePair evaluate(double t) const;
  /// Only the non-decaying poles.
  AmplitudePair evaluate_oscillatory(double t) const;
};

/// Indices of roots whose poles lie on the principal sheet, i.e.
/// Re(e^{i pi/4} u) > 0 so that sqrt(i u^2) = e^{i pi/4} u.
std::vector<int> principal_sheet_poles(const QuarticRootSet& roots);

/// Residue weights for the principal-sheet poles. Throws DegenerateRoots if
/// a used root coincides with another root.
ResidueTerms residue_weights(const QuarticRootSet& roots, const InitialState& init);
ResidueTerms residue_weights(const QuarticRootSet& roots, std::span<const int> poles, Complex a0, Complex b0);

enum class Amplitude { A, B };

/// Branch-cut integrand pieces bound to one scenario and initial state:
///
///   g3(x) = [(-x + i delta) A0 - i Omega B0] (-x + i delta) sqrt(x)
///   g2(x) = [(-x + i delta) A0 - i Omega B0] sqrt(x)
///   Z(x)  = [(-x + i delta)^2 + Omega^2]^2 + i alpha^2 (-x + i delta)^2 x
///
/// The cut contributes alpha e^{i pi/4}/pi * int g3 e^{(-x + i delta)t}/Z dx
/// to A and alpha Omega e^{-i pi/4}/pi * int g2 e^{(-x + i delta)t}/Z dx to B.
class BranchCutIntegrand {
 public:
  BranchCutIntegrand(const PhysicalScenario& scenario, const InitialState& init);
  BranchCutIntegrand(double alpha, double delta, double omega, Complex a0, Complex b0);

  Complex g2(double x) const;
  Complex g3(double x) const;
  Complex z(double x) const;

  double alpha() const { return alpha_; }
  double delta() const { return delta_; }
  double omega() const { return omega_; }
  Complex a0() const { return a0_; }
  Complex b0() const { return b0_; }

 private:
  double alpha_, delta_, omega_;
  Complex a0_, b0_;
};

/// Moments J_k(t) = int_0^inf (-x + i delta)^k sqrt(x) e^{-x t} / Z(x) dx,
/// k = 0, 1, 2, evaluated together with the substitution x = v^2 (removing
/// the sqrt(x) endpoint behaviour) and v = L w/(1 - w) mapping [0, inf) onto
/// [0, 1). Throws QuadratureFailure if abs_tol cannot be met.
std::array<Complex, 3> branch_cut_moments(double alpha, double delta, double omega, double t, double abs_tol);

/// Branch-cut contribution to A or B at time t, including the prefactor and
/// the e^{i delta t} phase.
Complex branch_cut_integral(const BranchCutIntegrand& integrand, double t, Amplitude which, double tol);

/// Evaluator of the band-edge amplitudes for one scenario. Roots, pole
/// selection and residue weights are computed once; each time point then
/// costs one vector-valued quadrature.
class PbgPropagator {
 public:
  /// Solves the quartic, selects the principal-sheet poles and checks that
  /// the residue sum plus cut integral reproduces the identity map at t = 0.
  /// If it does not, every subset of roots is tried and the one that passes
  /// is kept. Throws DegenerateRoots or ComputationError on failure.
  explicit PbgPropagator(const PhysicalScenario& scenario, double tol = kQuadratureTol);

  /// Uses the supplied roots and pole set as given, without verification.
  PbgPropagator(const PhysicalScenario& scenario, QuarticRootSet roots, std::vector<int> poles,
                double tol = kQuadratureTol);

  FundamentalSolution fundamental(double t) const;
  /// Residue part restricted to the non-decaying poles.
  FundamentalSolution asymptotic_fundamental(double t) const;
  AmplitudePair amplitudes(Complex a0, Complex b0, double t) const;

  const PhysicalScenario& scenario() const { return scenario_; }
  const QuarticRootSet& roots() const { return roots_; }
  const std::vector<int>& poles() const { return poles_; }
  double tolerance() const { return tol_; }
  /// Angular frequencies Re(u^2) + delta of the non-decaying poles.
  std::vector<double> oscillation_frequencies() const;

 private:
  FundamentalSolution residue_fundamental(double t, bool oscillatory_only) const;
  FundamentalSolution cut_fundamental(double t) const;
  double reconstruction_error(const std::vector<int>& poles, const std::array<Complex, 3>& moments_at_zero) const;

  PhysicalScenario scenario_;
  QuarticRootSet roots_;
  std::vector<int> poles_;
  double tol_;
};

AmplitudePair pbg_amplitudes(const PhysicalScenario& scenario, const InitialState& init, double t,
                             double tol = kQuadratureTol);
AmplitudePair pbg_asymptotic_amplitudes(const PhysicalScenario& scenario, const InitialState& init, double t);
FundamentalSolution pbg_fundamental(const PhysicalScenario& scenario, double t, double tol = kQuadratureTol);

}  // namespace qutrit
