#include "qutrit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qutrit/errors.hpp"
#include "qutrit/freespace.hpp"
#include "qutrit/parallel.hpp"

namespace qutrit {

namespace {

constexpr double kGamma = PhysicalScenario::decay_unit;

struct Derivative {
  Complex da, db;
};

Derivative rhs(double omega, Complex a, Complex b) {
  return {-0.5 * kGamma * a - kI * omega * b, -kI * omega * a};
}

void rk4_advance(double omega, Complex& a, Complex& b, double span) {
  const double h_max = 1e-3 / std::max(kGamma, omega);
  const long steps = std::max(1L, static_cast<long>(std::ceil(span / h_max)));
  const double h = span / static_cast<double>(steps);
  for (long i = 0; i < steps; ++i) {
    const Derivative k1 = rhs(omega, a, b);
    const Derivative k2 = rhs(omega, a + 0.5 * h * k1.da, b + 0.5 * h * k1.db);
    const Derivative k3 = rhs(omega, a + 0.5 * h * k2.da, b + 0.5 * h * k2.db);
    const Derivative k4 = rhs(omega, a + h * k3.da, b + h * k3.db);
    a += h / 6 * (k1.da + 2.0 * k2.da + 2.0 * k3.da + k4.da);
    b += h / 6 * (k1.db + 2.0 * k2.db + 2.0 * k3.db + k4.db);
  }
}

struct Transform {
  double alpha, delta, omega;
  Complex a0, b0;

  // Laplace-domain (A, B) at s' = s + i delta, sqrt(s) on the principal branch.
  std::pair<Complex, Complex> operator()(Complex s) const {
    const Complex sp = s + kI * delta;
    const Complex memory = alpha * std::polar(1.0, kPi / 4) * std::sqrt(s);
    const Complex d = sp * sp + memory * sp + omega * omega;
    return {(sp * a0 - kI * omega * b0) / d, ((sp + memory) * b0 - kI * omega * a0) / d};
  }
};

std::pair<Complex, Complex> talbot(const Transform& f, double t, double kappa, double radius, long nodes) {
  const double b = kappa / t;
  const double nu = std::max(1.0, 2.0 * radius / b);
  Complex sum_a = 0.0, sum_b = 0.0;
  for (long k = 0; k < nodes; ++k) {
    const double th = (static_cast<double>(k) + 0.5) / static_cast<double>(nodes) * 2 * kPi - kPi;
    Complex s, ds;
    if (th == 0.0) {
      s = b;
      ds = Complex(0.0, nu * b);
    } else {
      const double cot = std::cos(th) / std::sin(th);
      const double sin2 = std::sin(th) * std::sin(th);
      s = Complex(b * th * cot, nu * b * th);
      ds = Complex(b * (cot - th / sin2), nu * b);
    }
    const Complex weight = std::exp(s * t) * ds;
    const auto [fa, fb] = f(s);
    sum_a += fa * weight;
    sum_b += fb * weight;
  }
  // (1 / 2 pi i) * (2 pi / N)
  const Complex scale = 1.0 / (kI * static_cast<double>(nodes));
  return {sum_a * scale, sum_b * scale};
}

double discrepancy(const std::pair<Complex, Complex>& x, const std::pair<Complex, Complex>& y) {
  return std::max(std::abs(x.first - y.first), std::abs(x.second - y.second));
}

}  // namespace

std::vector<AmplitudePair> freespace_ode_oracle(const PhysicalScenario& scenario, const InitialState& init,
                                                const std::vector<double>& grid) {
  return freespace_ode_oracle(scenario, init.a0(), init.b0(), grid);
}

std::vector<AmplitudePair> freespace_ode_oracle(const PhysicalScenario& scenario, Complex a0, Complex b0,
                                                const std::vector<double>& grid) {
  if (scenario.medium != Medium::FreeSpace) throw std::invalid_argument("ODE oracle needs a free-space scenario");
  std::vector<AmplitudePair> out;
  out.reserve(grid.size());
  Complex a = a0, b = b0;
  double now = 0.0;
  for (double t : grid) {
    if (t < now) throw std::invalid_argument("ODE oracle grid must be non-decreasing and start at t >= 0");
    if (t > now) rk4_advance(scenario.rabi, a, b, t - now);
    now = t;
    out.push_back({a, b, t});
  }
  return out;
}

double pole_radius_bound(const PhysicalScenario& scenario) {
  // Fujiwara bound on the roots u of u^4 + alpha u^3 + 2 delta u^2 + alpha delta u - K.
  const double alpha = PhysicalScenario::decay_unit;
  const double delta = scenario.detuning;
  const double k = scenario.rabi * scenario.rabi - delta * delta;
  const double u = 2 * std::max({alpha, std::sqrt(2 * std::abs(delta)), std::cbrt(alpha * std::abs(delta)),
                                 std::pow(std::abs(k) / 2, 0.25)});
  return u * u + std::abs(delta);
}

AmplitudePair inverse_laplace_oracle(const PhysicalScenario& scenario, const InitialState& init, double t,
                                     const ContourParams& params) {
  return inverse_laplace_oracle(scenario, init.a0(), init.b0(), t, params);
}

AmplitudePair inverse_laplace_oracle(const PhysicalScenario& scenario, Complex a0, Complex b0, double t,
                                     const ContourParams& params) {
  if (scenario.medium != Medium::PhotonicBandGap)
    throw std::invalid_argument("contour oracle needs a photonic band gap scenario");
  if (t < 0) throw std::invalid_argument("contour oracle needs t >= 0");
  if (t == 0) return {a0, b0, 0.0};

  const Transform f{PhysicalScenario::decay_unit, scenario.detuning, scenario.rabi, a0, b0};
  const double radius = pole_radius_bound(scenario);
  const Complex phase = std::polar(1.0, scenario.detuning * t);

  if (params.nodes > 0) {
    const auto coarse = talbot(f, t, params.kappa, radius, params.nodes);
    const auto fine = talbot(f, t, params.kappa, radius, 2L * params.nodes);
    const double diff = discrepancy(coarse, fine);
    if (diff > params.agreement) {
      throw ContourFailure("contour inversion at t = " + std::to_string(t) + " changed by " + std::to_string(diff) +
                           " when doubling " + std::to_string(params.nodes) + " nodes");
    }
    return {phase * fine.first, phase * fine.second, t};
  }

  constexpr long kMaxNodes = 1L << 22;
  long nodes = std::max(64L, static_cast<long>(std::ceil(2 * radius * t)));
  auto previous = talbot(f, t, params.kappa, radius, nodes);
  double diff = 0.0;
  while (2 * nodes <= kMaxNodes) {
    nodes *= 2;
    const auto current = talbot(f, t, params.kappa, radius, nodes);
    diff = discrepancy(previous, current);
    previous = current;
    if (diff <= 1e-10) break;
  }
  if (diff > params.agreement) {
    throw ContourFailure("contour inversion at t = " + std::to_string(t) + " did not settle (last change " +
                         std::to_string(diff) + ")");
  }
  return {phase * previous.first, phase * previous.second, t};
}

QfimResult pure_state_qfi_oracle(double theta, double phi) {
  const Eigen::Vector3cd psi(std::cos(theta / 2), std::polar(std::sin(theta / 2), phi), 0.0);
  const Eigen::Vector3cd d_theta(-std::sin(theta / 2) / 2, std::polar(std::cos(theta / 2) / 2, phi), 0.0);
  const Eigen::Vector3cd d_phi(0.0, kI * std::polar(std::sin(theta / 2), phi), 0.0);
  auto entry = [&](const Eigen::Vector3cd& x, const Eigen::Vector3cd& y) {
    return 4 * (x.dot(y) - x.dot(psi) * psi.dot(y)).real();
  };
  QfimResult f;
  f.f_theta = entry(d_theta, d_theta);
  f.f_phi = entry(d_phi, d_phi);
  f.f_cross = entry(d_theta, d_phi);
  return with_bounds(f);
}

OracleReport crosscheck(const PhysicalScenario& scenario, const InitialState& init, const std::vector<double>& grid,
                        double tol) {
  if (scenario.medium == Medium::PhotonicBandGap) return crosscheck(PbgPropagator(scenario), init, grid, tol);

  OracleReport report;
  report.grid = grid;
  report.tolerance = tol;
  const auto reference = freespace_ode_oracle(scenario, init, grid);
  const FreeSpaceCoefficients c = freespace_coefficients(scenario, init);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const AmplitudePair closed = freespace_amplitudes(c, grid[i]);
    report.dev_a.push_back(std::abs(closed.a - reference[i].a));
    report.dev_b.push_back(std::abs(closed.b - reference[i].b));
  }
  report.max_abs_dev_a = report.dev_a.empty() ? 0.0 : *std::max_element(report.dev_a.begin(), report.dev_a.end());
  report.max_abs_dev_b = report.dev_b.empty() ? 0.0 : *std::max_element(report.dev_b.begin(), report.dev_b.end());
  report.passed = report.max_abs_dev_a <= tol && report.max_abs_dev_b <= tol;
  return report;
}

OracleReport crosscheck(const PbgPropagator& propagator, const InitialState& init, const std::vector<double>& grid,
                        double tol) {
  OracleReport report;
  report.grid = grid;
  report.tolerance = tol;
  report.dev_a.assign(grid.size(), 0.0);
  report.dev_b.assign(grid.size(), 0.0);
  parallel_for(grid.size(), [&](std::size_t i) {
    const AmplitudePair closed = propagator.amplitudes(init.a0(), init.b0(), grid[i]);
    const AmplitudePair reference = inverse_laplace_oracle(propagator.scenario(), init, grid[i]);
    report.dev_a[i] = std::abs(closed.a - reference.a);
    report.dev_b[i] = std::abs(closed.b - reference.b);
  });
  report.max_abs_dev_a = report.dev_a.empty() ? 0.0 : *std::max_element(report.dev_a.begin(), report.dev_a.end());
  report.max_abs_dev_b = report.dev_b.empty() ? 0.0 : *std::max_element(report.dev_b.begin(), report.dev_b.end());
  report.passed = report.max_abs_dev_a <= tol && report.max_abs_dev_b <= tol;
  return report;
}

}  // namespace qutrit
