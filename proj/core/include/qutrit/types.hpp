#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace qutrit {

using Complex = std::complex<double>;
inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = std::numbers::pi;

/// Tolerance for identities that hold exactly in closed form.
inline constexpr double kClosedFormTol = 1e-10;
/// Default absolute target for quadrature and contour integrals.
inline constexpr double kQuadratureTol = 1e-8;

enum class Medium { FreeSpace, PhotonicBandGap };

/// Dimensionless description of one physical configuration.
///
/// Free space: rates in units of the spontaneous emission rate (gamma = 1),
/// time axis is gamma*t. Photonic band gap: rates in units of alpha^2
/// (alpha = 1), time axis is alpha^2*t. The detuning from the band edge is
/// meaningful only for the band-gap medium and is zero in free space.
struct PhysicalScenario {
  Medium medium = Medium::FreeSpace;
  double rabi = 0.0;
  double detuning = 0.0;
  static constexpr double decay_unit = 1.0;

  friend bool operator==(const PhysicalScenario&, const PhysicalScenario&) = default;
};

enum class StateFamily {
  /// cos(theta/2)|a> + e^{i phi} sin(theta/2)|b>
  TwoLevelSuperposition,
  /// (|a> + e^{i phi}|b> + |c>)/sqrt(3); theta is ignored.
  EqualTriple,
};

struct InitialState {
  double theta = kPi / 2;
  double phi = 0.0;
  StateFamily family = StateFamily::TwoLevelSuperposition;

  /// Initial amplitude on |a>.
  Complex a0() const;
  /// Initial amplitude on |b>.
  Complex b0() const;

  friend bool operator==(const InitialState&, const InitialState&) = default;
};

struct AmplitudePair {
  Complex a;
  Complex b;
  double t = 0.0;

  double norm() const { return std::norm(a) + std::norm(b); }
};

/// Linear map (A(0), B(0)) -> (A(t), B(t)).
struct FundamentalSolution {
  Complex aa{1.0, 0.0};
  Complex ab{0.0, 0.0};
  Complex ba{0.0, 0.0};
  Complex bb{1.0, 0.0};
  double t = 0.0;

  AmplitudePair apply(Complex a0, Complex b0) const {
    return {aa * a0 + ab * b0, ba * a0 + bb * b0, t};
  }
};

/// 3x3 density matrix in the ordered basis (|a>, |b>, |c>).
using QutritDensityMatrix = Eigen::Matrix3cd;
/// Derivative of a density matrix with respect to one initial-state angle.
using MatrixDerivative = Eigen::Matrix3cd;

}  // namespace qutrit
