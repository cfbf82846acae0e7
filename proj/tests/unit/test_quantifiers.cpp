#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "qutrit/evolution.hpp"
#include "qutrit/oracle.hpp"
#include "qutrit/quantifiers.hpp"
#include "qutrit/simulation.hpp"
#include "qutrit/state.hpp"

using namespace qutrit;

namespace {

QfimResult matrix(double ft, double fp, double fc) {
  QfimResult f;
  f.f_theta = ft;
  f.f_phi = fp;
  f.f_cross = fc;
  return with_bounds(f);
}

Eigen::Matrix3cd random_hermitian(std::mt19937& rng) {
  std::normal_distribution<double> n;
  Eigen::Matrix3cd m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = Complex(n(rng), n(rng));
  return 0.5 * (m + m.adjoint());
}

QfimResult qfim_at(const Evolution& e, const InitialState& init, double t) {
  const FundamentalSolution f = e.fundamental(t);
  const QutritDensityMatrix rho = density_matrix(f.apply(init.a0(), init.b0()), init, e.accuracy());
  return qfim(rho, parameter_derivative(f, init, Parameter::Theta), parameter_derivative(f, init, Parameter::Phi));
}

}  // namespace

TEST_SUITE("quantifiers") {
  TEST_CASE("l1 coherence") {
    CHECK(l1_coherence(QutritDensityMatrix(Eigen::Vector3cd(0.2, 0.3, 0.5).asDiagonal())) == 0.0);
    for (double theta : {0.0, 0.3, kPi / 2, 2.0, kPi}) {
      const InitialState init{theta, 1.0};
      const QutritDensityMatrix rho = density_matrix({init.a0(), init.b0(), 0.0}, init);
      CHECK(std::abs(l1_coherence(rho) - std::sin(theta)) < 1e-15);
    }
    const InitialState tri{0.0, 2.0, StateFamily::EqualTriple};
    CHECK(l1_coherence(density_matrix({tri.a0(), tri.b0(), 0.0}, tri)) == doctest::Approx(2.0).epsilon(1e-15));
  }

  TEST_CASE("HSS values") {
    CHECK(hss(MatrixDerivative::Zero()) == 0.0);
    const InitialState tri{0.0, 0.9, StateFamily::EqualTriple};
    const double h = hss(parameter_derivative(FundamentalSolution{}, tri, Parameter::Phi));
    CHECK(std::abs(h - std::sqrt(2.0) / 3) < 1e-15);
  }

  TEST_CASE("HSS against a finite-difference-in-phi construction") {
    const Evolution e({Medium::FreeSpace, 0.5, 0.0});
    const double phi = 0.8, step = 1e-5;
    for (double t : uniform_grid(10.0, 11)) {
      auto rho = [&](double p) {
        const InitialState init{0.0, p, StateFamily::EqualTriple};
        return density_matrix(e.amplitudes(init, t), init);
      };
      const MatrixDerivative fd = (8.0 * (rho(phi + step) - rho(phi - step)) -
                                   (rho(phi + 2 * step) - rho(phi - 2 * step))) /
                                  (12 * step);
      const InitialState init{0.0, phi, StateFamily::EqualTriple};
      CHECK(std::abs(hss(parameter_derivative(e.fundamental(t), init, Parameter::Phi)) - hss(fd)) < 1e-7);
    }
  }

  TEST_CASE("HSS is invariant under a global phase of the amplitudes") {
    const Evolution e({Medium::PhotonicBandGap, 1.0, 0.0});
    const InitialState init{0.0, 1.0, StateFamily::EqualTriple};
    FundamentalSolution f = e.fundamental(3.0);
    const double before = hss(parameter_derivative(f, init, Parameter::Phi));
    const Complex g = std::polar(1.0, 0.77);
    f.aa *= g;
    f.ab *= g;
    f.ba *= g;
    f.bb *= g;
    CHECK(std::abs(hss(parameter_derivative(f, init, Parameter::Phi)) - before) < 1e-15);
  }

  TEST_CASE("chi by finite differences") {
    std::vector<HssSample> flat{{0, 0.3, 9}, {1, 0.3, 9}, {2, 0.3, 9}, {3, 0.3, 9}};
    fill_chi(flat);
    for (const HssSample& s : flat) CHECK(s.chi == 0.0);
    std::vector<HssSample> ramp{{0, 0, 0}, {0.5, 1, 0}, {1, 2, 0}};
    fill_chi(ramp);
    for (const HssSample& s : ramp) CHECK(s.chi == doctest::Approx(2.0));
  }

  TEST_CASE("backflow intervals") {
    std::vector<HssSample> decay;
    for (int i = 0; i < 50; ++i) decay.push_back({0.1 * i, std::exp(-0.1 * i), 0});
    fill_chi(decay);
    CHECK(nonmarkov_intervals(decay, 0.0).empty());

    std::vector<HssSample> bump;
    for (int i = 0; i < 101; ++i) {
      const double t = 0.1 * i;
      bump.push_back({t, std::exp(-t) + 0.5 * std::exp(-(t - 5) * (t - 5)), 0});
    }
    fill_chi(bump);
    const auto intervals = nonmarkov_intervals(bump, 1e-4);
    REQUIRE(intervals.size() == 1);
    CHECK(intervals[0].first > 3.0);
    CHECK(intervals[0].second < 5.1);
    CHECK(intervals[0].second > 4.5);
    // With the flipped reading every decreasing stretch counts instead.
    CHECK(nonmarkov_intervals(bump, 1e-4, HssSignConvention::Reversed).size() == 2);
  }

  TEST_CASE("SLD in the commuting case") {
    const QutritDensityMatrix rho = QutritDensityMatrix::Identity() / 3.0;
    const double s = 0.2;
    const MatrixDerivative d = Eigen::Vector3cd(s, -s, 0).asDiagonal();
    const Eigen::Matrix3cd l = sld(rho, d);
    CHECK((l - Eigen::Matrix3cd(Eigen::Vector3cd(3 * s, -3 * s, 0).asDiagonal())).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(sld_residual(rho, d, l) < 1e-15);
  }

  TEST_CASE("SLD residual for pure states and kernel leakage") {
    const InitialState init{1.0, 2.0};
    const QutritDensityMatrix rho = density_matrix({init.a0(), init.b0(), 0.0}, init);
    for (Parameter p : {Parameter::Theta, Parameter::Phi}) {
      const MatrixDerivative d = parameter_derivative(FundamentalSolution{}, init, p);
      CHECK(sld_residual(rho, d, sld(rho, d)) < 1e-9);
    }
    QutritDensityMatrix pure = QutritDensityMatrix::Zero();
    pure(0, 0) = 1.0;
    const MatrixDerivative kernel = Eigen::Vector3cd(0, 0.25, -0.25).asDiagonal();
    CHECK(sld_residual(pure, kernel, sld(pure, kernel)) == doctest::Approx(0.25));
    CHECK(qfim(pure, kernel, MatrixDerivative::Zero()).f_theta == 0.0);
  }

  TEST_CASE("spectral sum equals the SLD trace on random inputs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      Eigen::Matrix3cd g = random_hermitian(rng);
      QutritDensityMatrix rho = g * g.adjoint();
      rho /= rho.trace().real();
      Eigen::Matrix3cd d = random_hermitian(rng);
      d -= (d.trace() / 3.0) * Eigen::Matrix3cd::Identity();
      const QfimResult f = qfim(rho, d, MatrixDerivative::Zero());
      const double via_sld = sld_trace_qfi(rho, d);
      CHECK(std::abs(f.f_theta - via_sld) <= 1e-8 * std::max(1.0, via_sld));
    }
  }

  TEST_CASE("pure-state limit at t = 0") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> th(0.0, kPi), ph(0.0, 2 * kPi);
    for (int trial = 0; trial < 20; ++trial) {
      const InitialState init{th(rng), ph(rng)};
      const QfimResult got = qfim_at(Evolution({Medium::FreeSpace, 1.0, 0.0}), init, 0.0);
      const QfimResult want = pure_state_qfi_oracle(init.theta, init.phi);
      CHECK(std::abs(got.f_theta - want.f_theta) < 1e-10);
      CHECK(std::abs(got.f_phi - want.f_phi) < 1e-10);
      CHECK(std::abs(got.f_cross - want.f_cross) < 1e-10);
    }
  }

  TEST_CASE("QFIM symmetric PSD along trajectories") {
    for (const PhysicalScenario& s :
         {PhysicalScenario{Medium::FreeSpace, 1.0, 0.0}, PhysicalScenario{Medium::PhotonicBandGap, 0.5, 0.0}}) {
      const Evolution e(s);
      for (double t : uniform_grid(40.0, 41)) {
        const QfimResult f = qfim_at(e, InitialState{kPi / 2, kPi / 4}, t);
        const double tr = f.f_theta + f.f_phi;
        const double det = f.f_theta * f.f_phi - f.f_cross * f.f_cross;
        const double min_eig = tr / 2 - std::sqrt(std::max(0.0, tr * tr / 4 - det));
        CHECK(min_eig >= -1e-9);
      }
    }
  }

  TEST_CASE("block decomposition of a rank-two state") {
    // rho = n |v><v| + p |c><c| with v = (A, B)/sqrt(n):
    // F = dn dn / n + dp dp / p + 4 n (pure-state QFI of v).
    for (const PhysicalScenario& s :
         {PhysicalScenario{Medium::FreeSpace, 0.1, 0.0}, PhysicalScenario{Medium::PhotonicBandGap, 5.0, 0.0}}) {
      const Evolution e(s);
      const InitialState init{1.1, 0.4};
      for (double t : {0.5, 3.0, 10.0}) {
        const FundamentalSolution f = e.fundamental(t);
        const AmplitudePair v = f.apply(init.a0(), init.b0());
        const AmplitudePair dv[2] = {
            f.apply(-std::sin(init.theta / 2) / 2, std::polar(std::cos(init.theta / 2) / 2, init.phi)),
            f.apply(0.0, kI * init.b0())};
        const double n = v.norm();
        const Eigen::Vector2cd vh = Eigen::Vector2cd(v.a, v.b) / std::sqrt(n);
        double dn[2];
        Eigen::Vector2cd dvh[2];
        for (int k = 0; k < 2; ++k) {
          dn[k] = 2 * (std::conj(v.a) * dv[k].a + std::conj(v.b) * dv[k].b).real();
          dvh[k] = Eigen::Vector2cd(dv[k].a, dv[k].b) / std::sqrt(n) - Eigen::Vector2cd(v.a, v.b) * dn[k] / (2 * n * std::sqrt(n));
        }
        auto entry = [&](int i, int j) {
          const double pure = 4 * (dvh[i].dot(dvh[j]) - dvh[i].dot(vh) * vh.dot(dvh[j])).real();
          return dn[i] * dn[j] / n + dn[i] * dn[j] / (1 - n) + n * pure;
        };
        const QfimResult got = qfim_at(e, init, t);
        CHECK(got.f_theta == doctest::Approx(entry(0, 0)).epsilon(1e-8));
        CHECK(got.f_phi == doctest::Approx(entry(1, 1)).epsilon(1e-8));
        CHECK(got.f_cross == doctest::Approx(entry(0, 1)).epsilon(1e-8));
      }
    }
  }

  TEST_CASE("frozen free-space QFIM at Omega = 0.1, gamma t = 10") {
    const QfimResult f = qfim_at(Evolution({Medium::FreeSpace, 0.1, 0.0}), InitialState{kPi / 2, kPi / 4}, 10.0);
    CHECK(f.f_theta == doctest::Approx(0.63757628).epsilon(1e-6));
    CHECK(f.f_phi == doctest::Approx(0.0584334).epsilon(1e-5));
    CHECK(f.f_cross == doctest::Approx(-0.19272729).epsilon(1e-6));
    CHECK(f.sigma_min == doctest::Approx(6217.699).epsilon(1e-5));
  }

  TEST_CASE("scalar bounds") {
    CHECK(sigma_min(matrix(1, 1, 0)) == doctest::Approx(2.0));
    CHECK(std::isinf(sigma_min(matrix(2, 0, 0))));
    CHECK(sigma_min(matrix(1, 1, 0.5)) == doctest::Approx(2 / 0.75));
    const QfimResult b = matrix(4, 0.25, 0);
    CHECK(b.bound_theta == doctest::Approx(0.5));
    CHECK(b.bound_phi == doctest::Approx(2.0));
    CHECK(std::isinf(matrix(0, 1e-13, 0).bound_phi));
    const QfimResult zero = qfim(QutritDensityMatrix::Identity() / 3.0, MatrixDerivative::Zero(), MatrixDerivative::Zero());
    CHECK(zero.f_theta == 0.0);
    CHECK(zero.f_phi == 0.0);
    CHECK(zero.f_cross == 0.0);
    CHECK(std::isinf(zero.sigma_min));
  }
}
