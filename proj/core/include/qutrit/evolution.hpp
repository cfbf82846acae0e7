#pragma once

#include <optional>

#include "qutrit/pbg.hpp"
#include "qutrit/types.hpp"

namespace qutrit {

/// Amplitude evolution for either medium behind one interface.
class Evolution {
 public:
  explicit Evolution(const PhysicalScenario& scenario, double tol = kQuadratureTol);

  FundamentalSolution fundamental(double t) const;
  AmplitudePair amplitudes(const InitialState& init, double t) const;

  const PhysicalScenario& scenario() const { return scenario_; }
  /// Accuracy of the amplitudes: the closed-form tolerance in free space,
  /// the quadrature tolerance in the band-gap medium.
  double accuracy() const;
  /// Band-gap evaluator, or nullptr in free space.
  const PbgPropagator* pbg() const { return pbg_ ? &*pbg_ : nullptr; }

 private:
  PhysicalScenario scenario_;
  double tol_;
  std::optional<PbgPropagator> pbg_;
};

}  // namespace qutrit
