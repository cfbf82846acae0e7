#include "qutrit/pbg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qutrit/errors.hpp"
#include "qutrit/quadrature.hpp"

namespace qutrit {

namespace {

const Complex kEighthTurn = std::polar(1.0, kPi / 4);

bool is_oscillatory(Complex u) {
  const Complex u2 = u * u;
  return std::abs(u2.imag()) <= 1e-10 * std::max(1.0, std::abs(u2));
}

// Largest factor by which a moment error is amplified in a fundamental entry.
double moment_amplification(double alpha, double omega) {
  return alpha / kPi * std::max({1.0, omega, omega * omega});
}

}  // namespace

AmplitudePair ResidueTerms::evaluate(double t) const {
  AmplitudePair out{0.0, 0.0, t};
  for (const ResiduePole& pole : poles) {
    const Complex phase = std::exp(pole.exponent * t);
    out.a += pole.p * pole.q3 * phase;
    out.b += pole.p * pole.q2 * phase;
  }
  return out;
}

AmplitudePair ResidueTerms::evaluate_oscillatory(double t) const {
  AmplitudePair out{0.0, 0.0, t};
  for (const ResiduePole& pole : poles) {
    if (!pole.oscillatory) continue;
    const Complex phase = std::exp(pole.exponent * t);
    out.a += pole.p * pole.q3 * phase;
    out.b += pole.p * pole.q2 * phase;
  }
  return out;
}

std::vector<int> principal_sheet_poles(const QuarticRootSet& roots) {
  std::vector<int> out;
  for (int j = 0; j < 4; ++j) {
    const Complex u = roots.u[j];
    if ((kEighthTurn * u).real() > 1e-12 * std::max(1.0, std::abs(u))) out.push_back(j);
  }
  return out;
}

ResidueTerms residue_weights(const QuarticRootSet& roots, const InitialState& init) {
  const std::vector<int> poles = principal_sheet_poles(roots);
  return residue_weights(roots, poles, init.a0(), init.b0());
}

ResidueTerms residue_weights(const QuarticRootSet& roots, std::span<const int> poles, Complex a0, Complex b0) {
  const double alpha = roots.alpha;
  const double delta = roots.delta;
  const double omega = roots.omega;
  ResidueTerms terms;
  for (int j : poles) {
    const Complex u = roots.u[j];
    Complex denominator = 1.0;
    for (int k = 0; k < 4; ++k) {
      if (k == j) continue;
      const Complex gap = u - roots.u[k];
      if (std::abs(gap) < kDegenerateRootTol)
        throw DegenerateRoots("residue weight undefined: root u" + std::to_string(j + 1) + " coincides with u" +
                              std::to_string(k + 1));
      denominator *= gap;
    }
    ResiduePole pole;
    pole.root_index = j;
    pole.u = u;
    pole.p = 2.0 * u / denominator;
    pole.q3 = (u * u + delta) * a0 - omega * b0;
    pole.q2 = (u * u + alpha * u + delta) * b0 - omega * a0;
    pole.exponent = kI * (u * u + delta);
    pole.oscillatory = is_oscillatory(u);
    terms.poles.push_back(pole);
  }
  return terms;
}

BranchCutIntegrand::BranchCutIntegrand(const PhysicalScenario& scenario, const InitialState& init)
    : BranchCutIntegrand(PhysicalScenario::decay_unit, scenario.detuning, scenario.rabi, init.a0(), init.b0()) {}

BranchCutIntegrand::BranchCutIntegrand(double alpha, double delta, double omega, Complex a0, Complex b0)
    : alpha_(alpha), delta_(delta), omega_(omega), a0_(a0), b0_(b0) {}

Complex BranchCutIntegrand::g2(double x) const {
  const Complex c(-x, delta_);
  return (c * a0_ - kI * omega_ * b0_) * std::sqrt(x);
}

Complex BranchCutIntegrand::g3(double x) const {
  const Complex c(-x, delta_);
  return (c * a0_ - kI * omega_ * b0_) * c * std::sqrt(x);
}

Complex BranchCutIntegrand::z(double x) const {
  const Complex c(-x, delta_);
  const Complex c2 = c * c;
  const Complex k = c2 + omega_ * omega_;
  return k * k + kI * alpha_ * alpha_ * c2 * x;
}

std::array<Complex, 3> branch_cut_moments(double alpha, double delta, double omega, double t, double abs_tol) {
  const double scale = std::sqrt(std::max({alpha * alpha, omega, std::abs(delta)}));
  auto integrand = [=](double w) -> std::array<Complex, 3> {
    if (w >= 1.0) return {};
    const double one_minus = 1.0 - w;
    const double v = scale * w / one_minus;
    const double x = v * v;
    const double jacobian = 2.0 * v * scale / (one_minus * one_minus);
    const Complex c(-x, delta);
    const Complex c2 = c * c;
    const Complex k = c2 + omega * omega;
    const Complex z = k * k + kI * alpha * alpha * c2 * x;
    if (std::abs(z) == 0.0) throw QuadratureFailure("Z(x) vanishes on the integration ray");
    const Complex base = v * std::exp(-x * t) * jacobian / z;
    return {base, c * base, c2 * base};
  };
  return quad::integrate(integrand, 0.0, 1.0, abs_tol, 4000).value;
}

Complex branch_cut_integral(const BranchCutIntegrand& f, double t, Amplitude which, double tol) {
  const double moment_tol = tol / moment_amplification(f.alpha(), f.omega());
  const auto j = branch_cut_moments(f.alpha(), f.delta(), f.omega(), t, moment_tol);
  const Complex phase = std::polar(1.0, f.delta() * t);
  if (which == Amplitude::A) {
    return f.alpha() * kEighthTurn / kPi * phase * (f.a0() * j[2] - kI * f.omega() * f.b0() * j[1]);
  }
  return f.alpha() * f.omega() * std::conj(kEighthTurn) / kPi * phase * (f.a0() * j[1] - kI * f.omega() * f.b0() * j[0]);
}

PbgPropagator::PbgPropagator(const PhysicalScenario& scenario, double tol) : scenario_(scenario), tol_(tol) {
  if (scenario.medium != Medium::PhotonicBandGap)
    throw std::invalid_argument("PbgPropagator: scenario is not a photonic band gap medium");
  roots_ = quartic_roots(PhysicalScenario::decay_unit, scenario.detuning, scenario.rabi);
  poles_ = principal_sheet_poles(roots_);

  const double alpha = PhysicalScenario::decay_unit;
  const auto moments0 =
      branch_cut_moments(alpha, scenario.detuning, scenario.rabi, 0.0, tol_ / moment_amplification(alpha, scenario.rabi));
  const double accept = 10 * tol_ + 1e-12;
  if (reconstruction_error(poles_, moments0) <= accept) return;

  // Sheet classification disagreed with the t = 0 identity: let the identity
  // pick the pole set.
  double best_error = std::numeric_limits<double>::infinity();
  std::vector<int> best;
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<int> subset;
    for (int j = 0; j < 4; ++j)
      if (mask & (1 << j)) subset.push_back(j);
    const double err = reconstruction_error(subset, moments0);
    if (err < best_error) {
      best_error = err;
      best = subset;
    }
  }
  if (best_error > accept) {
    throw ComputationError("no pole selection reproduces the initial amplitudes (best error " +
                           std::to_string(best_error) + ")");
  }
  poles_ = best;
}

PbgPropagator::PbgPropagator(const PhysicalScenario& scenario, QuarticRootSet roots, std::vector<int> poles, double tol)
    : scenario_(scenario), roots_(std::move(roots)), poles_(std::move(poles)), tol_(tol) {}

double PbgPropagator::reconstruction_error(const std::vector<int>& poles,
                                           const std::array<Complex, 3>& moments_at_zero) const {
  PbgPropagator trial(scenario_, roots_, poles, tol_);
  const FundamentalSolution res = trial.residue_fundamental(0.0, false);
  const double alpha = roots_.alpha;
  const double omega = scenario_.rabi;
  const Complex pa = alpha * kEighthTurn / kPi;
  const Complex pb = alpha * omega * std::conj(kEighthTurn) / kPi;
  const auto& j = moments_at_zero;
  const Complex aa = res.aa + pa * j[2];
  const Complex ab = res.ab - pa * kI * omega * j[1];
  const Complex ba = res.ba + pb * j[1];
  const Complex bb = res.bb - pb * kI * omega * j[0];
  return std::max({std::abs(aa - 1.0), std::abs(ab), std::abs(ba), std::abs(bb - 1.0)});
}

FundamentalSolution PbgPropagator::residue_fundamental(double t, bool oscillatory_only) const {
  const double alpha = roots_.alpha;
  const double delta = scenario_.detuning;
  const double omega = scenario_.rabi;
  FundamentalSolution f{0.0, 0.0, 0.0, 0.0, t};
  // Linear in (A0, B0): evaluate the weights on unit initial data.
  const ResidueTerms from_a = residue_weights(roots_, poles_, 1.0, 0.0);
  for (const ResiduePole& pole : from_a.poles) {
    if (oscillatory_only && !pole.oscillatory) continue;
    const Complex u = pole.u;
    const Complex phase = std::exp(pole.exponent * t);
    f.aa += pole.p * (u * u + delta) * phase;
    f.ab += -pole.p * omega * phase;
    f.ba += -pole.p * omega * phase;
    f.bb += pole.p * (u * u + alpha * u + delta) * phase;
  }
  return f;
}

FundamentalSolution PbgPropagator::cut_fundamental(double t) const {
  const double alpha = roots_.alpha;
  const double delta = scenario_.detuning;
  const double omega = scenario_.rabi;
  const auto j = branch_cut_moments(alpha, delta, omega, t, tol_ / moment_amplification(alpha, omega));
  const Complex phase = std::polar(1.0, delta * t);
  const Complex pa = alpha * kEighthTurn / kPi * phase;
  const Complex pb = alpha * omega * std::conj(kEighthTurn) / kPi * phase;
  return {pa * j[2], -pa * kI * omega * j[1], pb * j[1], -pb * kI * omega * j[0], t};
}

FundamentalSolution PbgPropagator::fundamental(double t) const {
  const FundamentalSolution res = residue_fundamental(t, false);
  const FundamentalSolution cut = cut_fundamental(t);
  return {res.aa + cut.aa, res.ab + cut.ab, res.ba + cut.ba, res.bb + cut.bb, t};
}

FundamentalSolution PbgPropagator::asymptotic_fundamental(double t) const { return residue_fundamental(t, true); }

AmplitudePair PbgPropagator::amplitudes(Complex a0, Complex b0, double t) const { return fundamental(t).apply(a0, b0); }

std::vector<double> PbgPropagator::oscillation_frequencies() const {
  std::vector<double> out;
  for (int j : poles_) {
    const Complex u = roots_.u[j];
    if (is_oscillatory(u)) out.push_back((u * u).real() + scenario_.detuning);
  }
  return out;
}

AmplitudePair pbg_amplitudes(const PhysicalScenario& scenario, const InitialState& init, double t, double tol) {
  return PbgPropagator(scenario, tol).amplitudes(init.a0(), init.b0(), t);
}

AmplitudePair pbg_asymptotic_amplitudes(const PhysicalScenario& scenario, const InitialState& init, double t) {
  return PbgPropagator(scenario).asymptotic_fundamental(t).apply(init.a0(), init.b0());
}

FundamentalSolution pbg_fundamental(const PhysicalScenario& scenario, double t, double tol) {
  return PbgPropagator(scenario, tol).fundamental(t);
}

}  // namespace qutrit
