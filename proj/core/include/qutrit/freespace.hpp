#pragma once

#include "qutrit/types.hpp"

namespace qutrit {

/// Closed-form solution data for the driven qutrit in a flat (Markovian)
/// reservoir:
///
///   A(t) = (a1 + a_slope t) e^{y1 t} + a2 e^{y2 t}
///   B(t) = (b1 + b_slope t) e^{y1 t} + b2 e^{y2 t}
///
/// with y1,2 = -(gamma/2 +- beta)/2 and beta = sqrt((gamma/2)^2 - 4 Omega^2)
/// on the principal branch. The slope terms are non-zero only on the
/// confluent branch beta = 0 (Omega = gamma/4), where y1 = y2.
struct FreeSpaceCoefficients {
  Complex beta;
  Complex y1, y2;
  Complex a1, a2, b1, b2;
  Complex a_slope{}, b_slope{};
  bool confluent = false;
};

/// |beta| below which the confluent (double root) form is used.
inline constexpr double kConfluentThreshold = 1e-9;

FreeSpaceCoefficients freespace_coefficients(const PhysicalScenario& scenario, const InitialState& init);

/// Coefficients for arbitrary initial amplitudes (A(0), B(0)).
FreeSpaceCoefficients freespace_coefficients(const PhysicalScenario& scenario, Complex a0, Complex b0);

AmplitudePair freespace_amplitudes(const FreeSpaceCoefficients& coeffs, double t);

/// Linear map from (A(0), B(0)) to (A(t), B(t)).
FundamentalSolution freespace_fundamental(const PhysicalScenario& scenario, double t);

}  // namespace qutrit
