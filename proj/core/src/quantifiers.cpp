#include "qutrit/quantifiers.hpp"

#include <cmath>

#include "qutrit/evolution.hpp"
#include "qutrit/state.hpp"

namespace qutrit {

namespace {

struct Spectrum {
  Eigen::Vector3d values;
  Eigen::Matrix3cd vectors;
};

Spectrum spectrum(const QutritDensityMatrix& rho) {
  const Eigen::Matrix3cd hermitian = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(hermitian);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace

double l1_coherence(const QutritDensityMatrix& rho) {
  double sum = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) sum += std::abs(rho(i, j));
  return sum;
}

double hss(const MatrixDerivative& drho_dphi) {
  const double tr = (drho_dphi * drho_dphi).trace().real();
  return std::sqrt(std::max(0.0, 0.5 * tr));
}

std::vector<HssSample> hss_series(const PhysicalScenario& scenario, double phi, const std::vector<double>& grid,
                                  double tol) {
  const Evolution evolution(scenario, tol);
  InitialState init;
  init.family = StateFamily::EqualTriple;
  init.phi = phi;
  std::vector<HssSample> out;
  out.reserve(grid.size());
  for (double t : grid) {
    out.push_back({t, hss(parameter_derivative(evolution.fundamental(t), init, Parameter::Phi)), 0.0});
  }
  fill_chi(out);
  return out;
}

void fill_chi(std::vector<HssSample>& s) {
  const std::size_t n = s.size();
  if (n < 2) return;
  s[0].chi = (s[1].hss - s[0].hss) / (s[1].t - s[0].t);
  s[n - 1].chi = (s[n - 1].hss - s[n - 2].hss) / (s[n - 1].t - s[n - 2].t);
  for (std::size_t i = 1; i + 1 < n; ++i) s[i].chi = (s[i + 1].hss - s[i - 1].hss) / (s[i + 1].t - s[i - 1].t);
}

std::vector<std::pair<double, double>> nonmarkov_intervals(const std::vector<HssSample>& series, double threshold,
                                                           HssSignConvention convention) {
  std::vector<std::pair<double, double>> out;
  bool open = false;
  double start = 0.0;
  double last = 0.0;
  for (const HssSample& s : series) {
    const bool flow = convention == HssSignConvention::Standard ? s.chi > threshold : s.chi < -threshold;
    if (flow) {
      if (!open) start = s.t;
      open = true;
      last = s.t;
    } else if (open) {
      out.emplace_back(start, last);
      open = false;
    }
  }
  if (open) out.emplace_back(start, last);
  return out;
}

Eigen::Matrix3cd sld(const QutritDensityMatrix& rho, const MatrixDerivative& drho, double eps) {
  const Spectrum sp = spectrum(rho);
  const Eigen::Matrix3cd d = sp.vectors.adjoint() * drho * sp.vectors;
  Eigen::Matrix3cd l = Eigen::Matrix3cd::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double sum = sp.values(i) + sp.values(j);
      if (sum > eps) l(i, j) = 2.0 * d(i, j) / sum;
    }
  const Eigen::Matrix3cd out = sp.vectors * l * sp.vectors.adjoint();
  return 0.5 * (out + out.adjoint());
}

double sld_residual(const QutritDensityMatrix& rho, const MatrixDerivative& drho, const Eigen::Matrix3cd& l) {
  return (0.5 * (l * rho + rho * l) - drho).cwiseAbs().maxCoeff();
}

double sld_trace_qfi(const QutritDensityMatrix& rho, const MatrixDerivative& drho, double eps) {
  const Eigen::Matrix3cd l = sld(rho, drho, eps);
  return (rho * l * l).trace().real();
}

QfimResult qfim(const QutritDensityMatrix& rho, const MatrixDerivative& drho_theta, const MatrixDerivative& drho_phi,
                double eps) {
  const Spectrum sp = spectrum(rho);
  const Eigen::Matrix3cd dt = sp.vectors.adjoint() * drho_theta * sp.vectors;
  const Eigen::Matrix3cd dp = sp.vectors.adjoint() * drho_phi * sp.vectors;
  QfimResult f;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double sum = sp.values(i) + sp.values(j);
      if (sum <= eps) continue;
      f.f_theta += 2.0 * (dt(i, j) * dt(j, i)).real() / sum;
      f.f_phi += 2.0 * (dp(i, j) * dp(j, i)).real() / sum;
      f.f_cross += 2.0 * (dt(i, j) * dp(j, i)).real() / sum;
    }
  f.f_theta = std::max(0.0, f.f_theta);
  f.f_phi = std::max(0.0, f.f_phi);
  return with_bounds(f);
}

double sigma_min(const QfimResult& f) {
  const double det = f.f_theta * f.f_phi - f.f_cross * f.f_cross;
  if (det <= kSingularDet) return std::numeric_limits<double>::infinity();
  return (f.f_theta + f.f_phi) / det;
}

QfimResult with_bounds(QfimResult f) {
  const double inf = std::numeric_limits<double>::infinity();
  f.sigma_min = sigma_min(f);
  f.bound_theta = f.f_theta > kSingularDet ? 1.0 / std::sqrt(f.f_theta) : inf;
  f.bound_phi = f.f_phi > kSingularDet ? 1.0 / std::sqrt(f.f_phi) : inf;
  return f;
}

}  // namespace qutrit
