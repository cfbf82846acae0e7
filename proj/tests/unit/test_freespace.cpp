#include <doctest.h>

#include <cmath>

#include "qutrit/freespace.hpp"
#include "qutrit/oracle.hpp"
#include "qutrit/simulation.hpp"

using namespace qutrit;

namespace {

PhysicalScenario free_space(double omega) { return {Medium::FreeSpace, omega, 0.0}; }

}  // namespace

TEST_SUITE("freespace") {
  TEST_CASE("exponent and coefficient identities") {
    for (double omega : {0.0, 0.1, 0.2, 0.25, 0.3, 1.0, 5.0, 10.0})
      for (double theta : {0.0, 1.0, kPi / 2, kPi})
        for (double phi : {0.0, kPi / 4, 3.0}) {
          const InitialState init{theta, phi};
          const FreeSpaceCoefficients c = freespace_coefficients(free_space(omega), init);
          CHECK(std::abs(c.y1 + c.y2 + 0.5) < 1e-12);
          CHECK(std::abs(c.y1 * c.y2 - omega * omega) < 1e-12);
          CHECK(std::abs(c.a1 + c.a2 - init.a0()) < 1e-12);
          CHECK(std::abs(c.b1 + c.b2 - init.b0()) < 1e-12);
        }
  }

  TEST_CASE("undriven limit") {
    const FreeSpaceCoefficients c = freespace_coefficients(free_space(0.0), InitialState{0.0, 0.0});
    CHECK(std::abs(c.y1 + 0.5) < 1e-15);
    CHECK(std::abs(c.y2) < 1e-15);
    for (double t : {0.0, 0.5, 3.0, 10.0}) {
      const AmplitudePair p = freespace_amplitudes(c, t);
      CHECK(std::abs(std::norm(p.a) - std::exp(-t)) < 1e-14);
      CHECK(std::abs(p.b) < 1e-15);
    }
    const FundamentalSolution f = freespace_fundamental(free_space(0.0), 2.0);
    CHECK(std::abs(f.ab) < 1e-15);
    CHECK(std::abs(f.ba) < 1e-15);
    CHECK(std::abs(f.bb - 1.0) < 1e-15);
  }

  TEST_CASE("initial condition and identity map") {
    const InitialState init{kPi / 2, kPi / 4};
    const AmplitudePair p = freespace_amplitudes(freespace_coefficients(free_space(0.5), init), 0.0);
    CHECK(std::abs(p.a - std::cos(kPi / 4)) < 1e-15);
    CHECK(std::abs(p.b - std::polar(std::sin(kPi / 4), kPi / 4)) < 1e-15);
    const FundamentalSolution f = freespace_fundamental(free_space(0.5), 0.0);
    CHECK(std::abs(f.aa - 1.0) < 1e-15);
    CHECK(std::abs(f.ab) < 1e-15);
    CHECK(std::abs(f.ba) < 1e-15);
    CHECK(std::abs(f.bb - 1.0) < 1e-15);
  }

  TEST_CASE("reference values from a high-precision matrix exponential") {
    const InitialState init{kPi / 2, kPi / 4};
    const AmplitudePair p = freespace_amplitudes(freespace_coefficients(free_space(0.5), init), 2.0);
    CHECK(std::abs(p.a - Complex(0.35598549409301038881, -0.26675359755734649138)) < 1e-13);
    CHECK(std::abs(p.b - Complex(0.32985007669585083099, -0.047396478781563096354)) < 1e-13);
  }

  TEST_CASE("confluent branch at Omega = gamma/4") {
    const FreeSpaceCoefficients c = freespace_coefficients(free_space(0.25), InitialState{kPi / 2, 0.0});
    CHECK(c.confluent);
    const AmplitudePair p = freespace_amplitudes(c, 5.0);
    CHECK(std::abs(p.a - Complex(-0.050647371175578672368, -0.25323685587789336184)) < 1e-13);
    CHECK(std::abs(p.b - Complex(0.45582634058020805131, -0.25323685587789336184)) < 1e-13);

    const InitialState init{kPi / 2, kPi / 4};
    const std::vector<double> grid{1.0, 2.0, 5.0};
    const auto reference = freespace_ode_oracle(free_space(0.25), init, grid);
    const FreeSpaceCoefficients cc = freespace_coefficients(free_space(0.25), init);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const AmplitudePair q = freespace_amplitudes(cc, grid[i]);
      CHECK(std::abs(q.a - reference[i].a) < 1e-8);
      CHECK(std::abs(q.b - reference[i].b) < 1e-8);
    }
  }

  TEST_CASE("continuity across the confluent point") {
    const InitialState init{kPi / 2, kPi / 4};
    const FreeSpaceCoefficients mid = freespace_coefficients(free_space(0.25), init);
    for (double omega : {0.25 - 1e-6, 0.25 + 1e-6}) {
      const FreeSpaceCoefficients side = freespace_coefficients(free_space(omega), init);
      CHECK_FALSE(side.confluent);
      for (double t : {0.5, 2.0, 10.0, 30.0}) {
        const AmplitudePair a = freespace_amplitudes(mid, t);
        const AmplitudePair b = freespace_amplitudes(side, t);
        CHECK(std::abs(a.a - b.a) < 1e-4);
        CHECK(std::abs(a.b - b.b) < 1e-4);
      }
    }
  }

  TEST_CASE("norm bound and long-time decay") {
    for (double omega : {0.0, 0.1, 0.25, 0.5, 1.0, 5.0, 10.0})
      for (double theta : {0.0, kPi / 3, kPi / 2, kPi}) {
        const FreeSpaceCoefficients c = freespace_coefficients(free_space(omega), InitialState{theta, 1.0});
        for (double t : uniform_grid(40.0, 801)) CHECK(freespace_amplitudes(c, t).norm() <= 1 + 1e-10);
      }
    for (double omega : {0.5, 1.0, 5.0}) {
      const FreeSpaceCoefficients c = freespace_coefficients(free_space(omega), InitialState{kPi / 2, kPi / 4});
      CHECK(freespace_amplitudes(c, 40.0).norm() < 1e-6);
    }
  }

  TEST_CASE("weak drive leaves a slow mode") {
    // Omega = 0.1: y2 = -(1/2 - sqrt(0.21))/2, so the norm decays at 2|y2| ~ 0.042.
    const FreeSpaceCoefficients c = freespace_coefficients(free_space(0.1), InitialState{kPi / 2, kPi / 4});
    const double rate = std::log(freespace_amplitudes(c, 80.0).norm() / freespace_amplitudes(c, 120.0).norm()) / 40;
    CHECK(rate == doctest::Approx(0.5 - std::sqrt(0.21)).epsilon(1e-6));
    CHECK(freespace_amplitudes(c, 40.0).norm() > 1e-2);
  }

  TEST_CASE("fundamental solution agrees with direct amplitudes") {
    for (double omega : {0.1, 0.25, 0.7, 5.0})
      for (double t : {0.3, 4.0, 17.0}) {
        const InitialState init{1.1, 2.2};
        const AmplitudePair direct = freespace_amplitudes(freespace_coefficients(free_space(omega), init), t);
        const AmplitudePair mapped = freespace_fundamental(free_space(omega), t).apply(init.a0(), init.b0());
        CHECK(std::abs(direct.a - mapped.a) < 1e-14);
        CHECK(std::abs(direct.b - mapped.b) < 1e-14);
      }
  }

  TEST_CASE("band-gap scenario is rejected") {
    CHECK_THROWS_AS(freespace_coefficients(PhysicalScenario{Medium::PhotonicBandGap, 0.5, 0.0}, InitialState{}),
                    std::invalid_argument);
  }
}
