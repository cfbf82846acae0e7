#pragma once

#include "qutrit/types.hpp"

namespace qutrit {

enum class Parameter { Theta, Phi };

/// Reduced qutrit state from the amplitudes:
///   rho_aa = |A|^2, rho_bb = |B|^2, rho_cc = 1 - |A|^2 - |B|^2, rho_ab = A B*
/// and, for the equal-triple family, rho_ac = A/sqrt(3), rho_bc = B/sqrt(3)
/// (zero for the two-level family).
///
/// Norms up to 1 + 100*tol are renormalised; larger ones throw NormViolation.
QutritDensityMatrix density_matrix(const AmplitudePair& amps, const InitialState& init, double tol = kClosedFormTol);

/// Exact d(rho)/d(param) through the linear map (A0, B0) -> (A, B).
/// Theta derivatives are defined for the two-level family only.
MatrixDerivative parameter_derivative(const FundamentalSolution& fund, const InitialState& init, Parameter param);

struct StateDiagnostics {
  double hermiticity_error = 0.0;  ///< max |rho - rho^dagger|
  double trace_error = 0.0;        ///< |Tr rho - 1|
  double min_eigenvalue = 0.0;
  double purity = 0.0;  ///< Tr rho^2

  bool valid() const {
    return hermiticity_error <= 1e-12 && trace_error <= 1e-12 && min_eigenvalue >= -1e-9 && purity <= 1 + 1e-9;
  }
};

StateDiagnostics diagnose(const QutritDensityMatrix& rho);

}  // namespace qutrit
