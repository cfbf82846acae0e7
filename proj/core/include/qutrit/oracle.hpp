#pragma once

#include <vector>

#include "qutrit/pbg.hpp"
#include "qutrit/quantifiers.hpp"
#include "qutrit/types.hpp"

namespace qutrit {

// Reference evaluations that share nothing with the closed-form paths
// beyond the equations of motion or the Laplace-domain denominator.

/// Classic RK4 integration of
///   dA/dt = -(gamma/2) A - i Omega B,   dB/dt = -i Omega A
/// with step at most 1e-3 / max(gamma, Omega).
std::vector<AmplitudePair> freespace_ode_oracle(const PhysicalScenario& scenario, const InitialState& init,
                                                const std::vector<double>& grid);
std::vector<AmplitudePair> freespace_ode_oracle(const PhysicalScenario& scenario, Complex a0, Complex b0,
                                                const std::vector<double>& grid);

struct ContourParams {
  /// Quadrature nodes on the contour; 0 picks a count from t and the pole bound.
  int nodes = 0;
  /// Contour scale: the contour crosses the real axis at s = kappa / t.
  double kappa = 4.0;
  /// Allowed change when the node count is doubled.
  double agreement = 1e-6;
};

/// Numerical Bromwich inversion of the Laplace-domain amplitudes along a
/// modified Talbot contour
///   s(th) = b th cot(th) + i nu b th,   th in (-pi, pi),   b = kappa / t,
/// which wraps the branch cut of sqrt(s) on the negative real axis and every
/// pole. The result at `nodes` is compared with the result at twice as many;
/// disagreement beyond `agreement` throws ContourFailure. In automatic mode the
/// node count keeps doubling until two resolutions agree to 1e-10.
AmplitudePair inverse_laplace_oracle(const PhysicalScenario& scenario, const InitialState& init, double t,
                                     const ContourParams& params = {});
AmplitudePair inverse_laplace_oracle(const PhysicalScenario& scenario, Complex a0, Complex b0, double t,
                                     const ContourParams& params = {});

/// Upper bound on |s| over the poles of the Laplace-domain amplitudes.
double pole_radius_bound(const PhysicalScenario& scenario);

/// F_{mu nu} = 4 Re[<d_mu psi|d_nu psi> - <d_mu psi|psi><psi|d_nu psi>] for
/// cos(theta/2)|a> + e^{i phi} sin(theta/2)|b>.
QfimResult pure_state_qfi_oracle(double theta, double phi);

struct OracleReport {
  std::vector<double> grid;
  double max_abs_dev_a = 0.0;
  double max_abs_dev_b = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  /// Per-point deviations, aligned with grid.
  std::vector<double> dev_a, dev_b;
};

/// Runs the medium-appropriate oracle against the closed-form evaluation.
OracleReport crosscheck(const PhysicalScenario& scenario, const InitialState& init, const std::vector<double>& grid,
                        double tol);
/// Band-gap crosscheck against an explicitly supplied propagator.
OracleReport crosscheck(const PbgPropagator& propagator, const InitialState& init, const std::vector<double>& grid,
                        double tol);

}  // namespace qutrit
