#include <doctest.h>

#include <cmath>

#include "qutrit/errors.hpp"
#include "qutrit/freespace.hpp"
#include "qutrit/oracle.hpp"
#include "qutrit/pbg.hpp"
#include "qutrit/simulation.hpp"

using namespace qutrit;

TEST_SUITE("oracle") {
  TEST_CASE("RK integration of pure decay") {
    const auto grid = uniform_grid(10.0, 21);
    const auto path = freespace_ode_oracle({Medium::FreeSpace, 0.0, 0.0}, InitialState{0.0, 0.0}, grid);
    for (const AmplitudePair& p : path) CHECK(std::abs(std::norm(p.a) - std::exp(-p.t)) < 1e-9);
  }

  TEST_CASE("RK norm is non-increasing and matches the closed form") {
    const PhysicalScenario s{Medium::FreeSpace, 0.5, 0.0};
    const InitialState init{kPi / 2, kPi / 4};
    const auto grid = uniform_grid(20.0, 401);
    const auto path = freespace_ode_oracle(s, init, grid);
    for (std::size_t i = 1; i < path.size(); ++i) CHECK(path[i].norm() <= path[i - 1].norm() + 1e-15);
    const FreeSpaceCoefficients c = freespace_coefficients(s, init);
    CHECK(std::abs(path[40].a - freespace_amplitudes(c, 2.0).a) < 1e-8);
  }

  TEST_CASE("contour inversion near t = 0") {
    const InitialState init{kPi / 2, kPi / 4};
    const double t = 1e-6;
    const AmplitudePair p = inverse_laplace_oracle({Medium::PhotonicBandGap, 0.5, 0.0}, init, t);
    // Band-edge memory: A - A0 starts as -2 e^{i pi/4} sqrt(t/pi) A0; the drive only enters at O(t).
    const Complex lead = init.a0() * (1.0 - 2.0 * std::polar(1.0, kPi / 4) * std::sqrt(t / kPi));
    CHECK(std::abs(p.a - lead) < 2e-6);
    CHECK(std::abs(p.b - init.b0()) < 2e-6);
    const AmplitudePair closed = PbgPropagator({Medium::PhotonicBandGap, 0.5, 0.0}).amplitudes(init.a0(), init.b0(), t);
    CHECK(std::abs(p.a - closed.a) < 1e-8);
    CHECK(std::abs(p.b - closed.b) < 1e-8);
  }

  TEST_CASE("band edge without driving decays as a power law") {
    // A(t) = e^{i t} erfc(e^{i pi/4} sqrt(t)); |A(100)| from a 30-digit evaluation.
    const AmplitudePair p = inverse_laplace_oracle({Medium::PhotonicBandGap, 0.0, 0.0}, 1.0, 0.0, 100.0);
    CHECK(std::abs(std::abs(p.a) - 0.056415435383663401) < 1e-9);
    CHECK(std::abs(p.a) == doctest::Approx(1 / std::sqrt(100 * kPi)).epsilon(0.01));
  }

  TEST_CASE("contour agrees with residues plus cut") {
    for (double omega : {0.1, 0.5, 1.0, 5.0})
      for (double delta : {-1.0, 0.0, 1.0}) {
        const PhysicalScenario s{Medium::PhotonicBandGap, omega, delta};
        const PbgPropagator p(s);
        const InitialState init{kPi / 2, kPi / 4};
        for (double t : {0.5, 1.0, 5.0, 20.0, 50.0}) {
          const AmplitudePair closed = p.amplitudes(init.a0(), init.b0(), t);
          const AmplitudePair ref = inverse_laplace_oracle(s, init, t);
          CHECK(std::abs(closed.a - ref.a) < 1e-6);
          CHECK(std::abs(closed.b - ref.b) < 1e-6);
        }
      }
  }

  TEST_CASE("doubling the node count is stable") {
    const PhysicalScenario s{Medium::PhotonicBandGap, 1.0, 0.0};
    const InitialState init{1.0, 2.0};
    for (double t : {1.0, 10.0}) {
      ContourParams params;
      params.nodes = 1024;
      params.agreement = 1e-8;
      const AmplitudePair a = inverse_laplace_oracle(s, init, t, params);
      params.nodes = 2048;
      const AmplitudePair b = inverse_laplace_oracle(s, init, t, params);
      CHECK(std::abs(a.a - b.a) < 1e-8);
      CHECK(std::abs(a.b - b.b) < 1e-8);
    }
  }

  TEST_CASE("too few nodes is reported") {
    ContourParams params;
    params.nodes = 16;
    CHECK_THROWS_AS(inverse_laplace_oracle({Medium::PhotonicBandGap, 5.0, 0.0}, InitialState{}, 50.0, params),
                    ContourFailure);
  }

  TEST_CASE("medium mismatch") {
    CHECK_THROWS_AS(inverse_laplace_oracle({Medium::FreeSpace, 1.0, 0.0}, InitialState{}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(freespace_ode_oracle({Medium::PhotonicBandGap, 1.0, 0.0}, InitialState{}, {1.0}),
                    std::invalid_argument);
  }

  TEST_CASE("pure-state QFI") {
    const QfimResult a = pure_state_qfi_oracle(kPi / 2, 0.3);
    CHECK(a.f_theta == doctest::Approx(1.0));
    CHECK(a.f_phi == doctest::Approx(1.0));
    CHECK(a.sigma_min == doctest::Approx(2.0));
    const QfimResult b = pure_state_qfi_oracle(0.0, 1.0);
    CHECK(b.f_theta == doctest::Approx(1.0));
    CHECK(std::abs(b.f_phi) < 1e-15);
    for (double theta : {0.1, 1.0, 2.5}) CHECK(std::abs(pure_state_qfi_oracle(theta, 4.0).f_cross) < 1e-15);
  }

  TEST_CASE("crosscheck reports") {
    const InitialState init{kPi / 2, kPi / 4};
    for (double omega : {0.1, 1.0, 5.0, 10.0}) {
      const OracleReport r = crosscheck({Medium::FreeSpace, omega, 0.0}, init, uniform_grid(40.0, 81), 1e-7);
      CHECK(r.passed);
      CHECK(r.max_abs_dev_a >= 0.0);
    }
    for (double omega : {0.1, 0.5, 1.0, 5.0}) {
      const OracleReport r = crosscheck({Medium::PhotonicBandGap, omega, 0.0}, init, uniform_grid(50.0, 11), 1e-6);
      CHECK(r.passed);
    }
  }

  TEST_CASE("corrupted roots fail the crosscheck") {
    const PhysicalScenario s{Medium::PhotonicBandGap, 0.5, 0.0};
    QuarticRootSet roots = quartic_roots(1.0, 0.0, 0.5);
    roots.u[0] *= 1.01;
    const PbgPropagator corrupt(s, roots, principal_sheet_poles(roots));
    const OracleReport r = crosscheck(corrupt, InitialState{kPi / 2, kPi / 4}, uniform_grid(20.0, 5), 1e-6);
    CHECK_FALSE(r.passed);
    CHECK(r.max_abs_dev_a > 1e-4);
  }
}
