#include "qutrit/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qutrit/errors.hpp"

namespace qutrit {

namespace {

const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

}  // namespace

QutritDensityMatrix density_matrix(const AmplitudePair& amps, const InitialState& init, double tol) {
  Complex a = amps.a;
  Complex b = amps.b;
  const double n = std::norm(a) + std::norm(b);
  if (n > 1 + 100 * tol) {
    throw NormViolation("|A|^2 + |B|^2 = " + std::to_string(n) + " exceeds 1 at t = " + std::to_string(amps.t));
  }
  if (n > 1) {
    a /= std::sqrt(n);
    b /= std::sqrt(n);
  }

  QutritDensityMatrix rho = QutritDensityMatrix::Zero();
  rho(0, 0) = std::norm(a);
  rho(1, 1) = std::norm(b);
  rho(2, 2) = std::max(0.0, 1.0 - std::norm(a) - std::norm(b));
  rho(0, 1) = a * std::conj(b);
  rho(1, 0) = std::conj(rho(0, 1));
  if (init.family == StateFamily::EqualTriple) {
    rho(0, 2) = a * kInvSqrt3;
    rho(1, 2) = b * kInvSqrt3;
    rho(2, 0) = std::conj(rho(0, 2));
    rho(2, 1) = std::conj(rho(1, 2));
  }
  return rho;
}

MatrixDerivative parameter_derivative(const FundamentalSolution& fund, const InitialState& init, Parameter param) {
  Complex da0, db0;
  if (param == Parameter::Theta) {
    if (init.family != StateFamily::TwoLevelSuperposition)
      throw std::invalid_argument("theta derivative is defined only for the two-level family");
    da0 = -std::sin(init.theta / 2) / 2;
    db0 = std::polar(std::cos(init.theta / 2) / 2, init.phi);
  } else {
    da0 = 0.0;
    db0 = kI * init.b0();
  }

  const AmplitudePair v = fund.apply(init.a0(), init.b0());
  const AmplitudePair dv = fund.apply(da0, db0);

  MatrixDerivative d = MatrixDerivative::Zero();
  d(0, 0) = 2 * (std::conj(v.a) * dv.a).real();
  d(1, 1) = 2 * (std::conj(v.b) * dv.b).real();
  d(2, 2) = -(d(0, 0) + d(1, 1));
  d(0, 1) = dv.a * std::conj(v.b) + v.a * std::conj(dv.b);
  d(1, 0) = std::conj(d(0, 1));
  if (init.family == StateFamily::EqualTriple) {
    d(0, 2) = dv.a * kInvSqrt3;
    d(1, 2) = dv.b * kInvSqrt3;
    d(2, 0) = std::conj(d(0, 2));
    d(2, 1) = std::conj(d(1, 2));
  }
  return d;
}

StateDiagnostics diagnose(const QutritDensityMatrix& rho) {
  StateDiagnostics out;
  out.hermiticity_error = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  out.trace_error = std::abs(rho.trace() - 1.0);
  const Eigen::Matrix3cd hermitian = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(hermitian, Eigen::EigenvaluesOnly);
  out.min_eigenvalue = solver.eigenvalues().minCoeff();
  out.purity = (rho * rho).trace().real();
  return out;
}

}  // namespace qutrit
