#include <doctest.h>

#include <cmath>

#include "qutrit/errors.hpp"
#include "qutrit/evolution.hpp"
#include "qutrit/simulation.hpp"
#include "qutrit/state.hpp"

using namespace qutrit;

namespace {

QutritDensityMatrix rho_at(const Evolution& e, double theta, double phi, double t, StateFamily family) {
  const InitialState init{theta, phi, family};
  return density_matrix(e.amplitudes(init, t), init, 1e-6);
}

// Richardson-extrapolated central difference.
MatrixDerivative finite_difference(const Evolution& e, const InitialState& init, Parameter p, double t) {
  auto central = [&](double h) {
    const double dt = p == Parameter::Theta ? h : 0.0;
    const double dp = p == Parameter::Phi ? h : 0.0;
    return MatrixDerivative((rho_at(e, init.theta + dt, init.phi + dp, t, init.family) -
                             rho_at(e, init.theta - dt, init.phi - dp, t, init.family)) /
                            (2 * h));
  };
  const double h = 1e-5;
  return MatrixDerivative((4.0 * central(h / 2) - central(h)) / 3.0);
}

}  // namespace

TEST_SUITE("state") {
  TEST_CASE("basis state") {
    const QutritDensityMatrix rho = density_matrix({1.0, 0.0, 0.0}, InitialState{});
    QutritDensityMatrix expected = QutritDensityMatrix::Zero();
    expected(0, 0) = 1.0;
    CHECK((rho - expected).cwiseAbs().maxCoeff() == 0.0);
  }

  TEST_CASE("initial superposition") {
    const Complex a = std::cos(kPi / 4), b = std::polar(std::sin(kPi / 4), kPi / 4);
    const QutritDensityMatrix rho = density_matrix({a, b, 0.0}, InitialState{kPi / 2, kPi / 4});
    CHECK(std::abs(rho(0, 1) - std::polar(std::cos(kPi / 4) * std::sin(kPi / 4), -kPi / 4)) < 1e-15);
    CHECK(std::abs(rho(2, 2)) < 1e-15);
    CHECK(std::abs(rho(0, 2)) == 0.0);
    CHECK(std::abs(rho(1, 2)) == 0.0);
  }

  TEST_CASE("equal triple is pure with uniform moduli") {
    const double s = 1 / std::sqrt(3.0);
    const QutritDensityMatrix rho = density_matrix({s, s, 0.0}, InitialState{0.0, 0.0, StateFamily::EqualTriple});
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(std::abs(std::abs(rho(i, j)) - 1.0 / 3) < 1e-15);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(rho);
    CHECK(solver.eigenvalues()(2) == doctest::Approx(1.0));
    CHECK(std::abs(solver.eigenvalues()(0)) < 1e-15);
    CHECK(std::abs(solver.eigenvalues()(1)) < 1e-15);
    CHECK(diagnose(rho).valid());
  }

  TEST_CASE("norm clamping and violation") {
    const double over = std::sqrt((1 + 5e-11) / 2);
    const QutritDensityMatrix rho = density_matrix({over, over, 0.0}, InitialState{}, 1e-10);
    CHECK(rho(2, 2).real() == 0.0);
    CHECK(std::abs(rho.trace() - 1.0) < 1e-15);
    const double far = std::sqrt((1 + 1e-6) / 2);
    CHECK_THROWS_AS(density_matrix({far, far, 0.0}, InitialState{}, 1e-10), NormViolation);
  }

  TEST_CASE("derivatives at t = 0") {
    const Evolution e({Medium::FreeSpace, 0.5, 0.0});
    const InitialState init{kPi / 2, 0.7};
    const MatrixDerivative dt = parameter_derivative(e.fundamental(0.0), init, Parameter::Theta);
    CHECK(dt(0, 0).real() == doctest::Approx(-0.5));
    const MatrixDerivative dp = parameter_derivative(e.fundamental(0.0), init, Parameter::Phi);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(dp(i, i)) < 1e-16);
  }

  TEST_CASE("theta derivative needs the two-level family") {
    CHECK_THROWS_AS(parameter_derivative(FundamentalSolution{}, InitialState{1.0, 1.0, StateFamily::EqualTriple},
                                         Parameter::Theta),
                    std::invalid_argument);
  }

  TEST_CASE("finite-difference oracle, free space Omega = 0.5 at t = 1") {
    const Evolution e({Medium::FreeSpace, 0.5, 0.0});
    const InitialState init{kPi / 2, kPi / 4};
    for (Parameter p : {Parameter::Theta, Parameter::Phi}) {
      const MatrixDerivative exact = parameter_derivative(e.fundamental(1.0), init, p);
      CHECK((exact - finite_difference(e, init, p, 1.0)).cwiseAbs().maxCoeff() < 1e-7);
    }
  }

  TEST_CASE("finite-difference oracle across media, parameters and families") {
    const PhysicalScenario scenarios[] = {{Medium::FreeSpace, 1.0, 0.0},
                                          {Medium::PhotonicBandGap, 0.5, 0.0},
                                          {Medium::PhotonicBandGap, 5.0, -1.0}};
    for (const PhysicalScenario& s : scenarios) {
      const Evolution e(s, 1e-11);
      for (double t : uniform_grid(20.0, 10)) {
        for (Parameter p : {Parameter::Theta, Parameter::Phi}) {
          const InitialState init{1.2, 2.1};
          const MatrixDerivative exact = parameter_derivative(e.fundamental(t), init, p);
          CHECK((exact - finite_difference(e, init, p, t)).cwiseAbs().maxCoeff() < 1e-6);
          CHECK((exact - exact.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
          CHECK(std::abs(exact.trace()) < 1e-12);
        }
        const InitialState triple{0.0, 2.1, StateFamily::EqualTriple};
        const MatrixDerivative exact = parameter_derivative(e.fundamental(t), triple, Parameter::Phi);
        CHECK((exact - finite_difference(e, triple, Parameter::Phi, t)).cwiseAbs().maxCoeff() < 1e-6);
      }
    }
  }

  TEST_CASE("validity along trajectories") {
    for (const PhysicalScenario& s :
         {PhysicalScenario{Medium::FreeSpace, 5.0, 0.0}, PhysicalScenario{Medium::PhotonicBandGap, 1.0, 1.0}}) {
      const Evolution e(s);
      for (StateFamily family : {StateFamily::TwoLevelSuperposition, StateFamily::EqualTriple}) {
        const InitialState init{kPi / 3, 4.0, family};
        for (double t : uniform_grid(40.0, 81)) {
          const StateDiagnostics d = diagnose(density_matrix(e.amplitudes(init, t), init, e.accuracy()));
          CHECK(d.valid());
        }
      }
    }
  }
}
