#include "qutrit/evolution.hpp"

#include "qutrit/freespace.hpp"

namespace qutrit {

Evolution::Evolution(const PhysicalScenario& scenario, double tol) : scenario_(scenario), tol_(tol) {
  if (scenario.medium == Medium::PhotonicBandGap) pbg_.emplace(scenario, tol);
}

FundamentalSolution Evolution::fundamental(double t) const {
  if (pbg_) return pbg_->fundamental(t);
  return freespace_fundamental(scenario_, t);
}

AmplitudePair Evolution::amplitudes(const InitialState& init, double t) const {
  return fundamental(t).apply(init.a0(), init.b0());
}

double Evolution::accuracy() const { return pbg_ ? tol_ : kClosedFormTol; }

}  // namespace qutrit
