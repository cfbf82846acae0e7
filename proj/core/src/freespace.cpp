#include "qutrit/freespace.hpp"

#include <cmath>
#include <stdexcept>

namespace qutrit {

FreeSpaceCoefficients freespace_coefficients(const PhysicalScenario& scenario, const InitialState& init) {
  return freespace_coefficients(scenario, init.a0(), init.b0());
}

FreeSpaceCoefficients freespace_coefficients(const PhysicalScenario& scenario, Complex a0, Complex b0) {
  if (scenario.medium != Medium::FreeSpace)
    throw std::invalid_argument("freespace_coefficients: scenario is not free space");

  const double half_gamma = PhysicalScenario::decay_unit / 2;
  const double omega = scenario.rabi;

  FreeSpaceCoefficients c;
  c.beta = std::sqrt(Complex(half_gamma * half_gamma - 4 * omega * omega, 0.0));
  c.y1 = -(half_gamma + c.beta) / 2.0;
  c.y2 = -(half_gamma - c.beta) / 2.0;

  // A'(0) = -(gamma/2) A0 - i Omega B0,  B'(0) = -i Omega A0.
  if (std::abs(c.beta) < kConfluentThreshold) {
    const Complex y = -half_gamma / 2;
    c.confluent = true;
    c.y1 = c.y2 = y;
    c.a1 = a0;
    c.b1 = b0;
    c.a2 = c.b2 = 0.0;
    c.a_slope = -half_gamma * a0 - kI * omega * b0 - y * a0;
    c.b_slope = -kI * omega * a0 - y * b0;
    return c;
  }

  c.a1 = -(c.y1 * a0 - kI * omega * b0) / c.beta;
  c.a2 = a0 - c.a1;
  c.b1 = -((c.y1 + half_gamma) * b0 - kI * omega * a0) / c.beta;
  c.b2 = b0 - c.b1;
  return c;
}

AmplitudePair freespace_amplitudes(const FreeSpaceCoefficients& c, double t) {
  const Complex e1 = std::exp(c.y1 * t);
  const Complex e2 = std::exp(c.y2 * t);
  return {(c.a1 + c.a_slope * t) * e1 + c.a2 * e2, (c.b1 + c.b_slope * t) * e1 + c.b2 * e2, t};
}

FundamentalSolution freespace_fundamental(const PhysicalScenario& scenario, double t) {
  const AmplitudePair from_a = freespace_amplitudes(freespace_coefficients(scenario, 1.0, 0.0), t);
  const AmplitudePair from_b = freespace_amplitudes(freespace_coefficients(scenario, 0.0, 1.0), t);
  return {from_a.a, from_b.a, from_a.b, from_b.b, t};
}

}  // namespace qutrit
