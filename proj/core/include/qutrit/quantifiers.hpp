#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "qutrit/types.hpp"

namespace qutrit {

inline constexpr double kSpectralCutoff = 1e-10;
inline constexpr double kSingularDet = 1e-12;

struct QfimResult {
  double f_theta = 0.0;
  double f_phi = 0.0;
  double f_cross = 0.0;
  double sigma_min = std::numeric_limits<double>::infinity();
  double bound_theta = std::numeric_limits<double>::infinity();
  double bound_phi = std::numeric_limits<double>::infinity();
};

struct HssSample {
  double t = 0.0;
  double hss = 0.0;
  double chi = 0.0;  ///< d(hss)/dt
};

/// Which sign of chi counts as information backflow.
enum class HssSignConvention {
  Standard,  ///< backflow where chi > threshold
  Reversed,  ///< backflow where chi < -threshold
};

/// Sum of moduli of the off-diagonal entries.
double l1_coherence(const QutritDensityMatrix& rho);

/// Hilbert-Schmidt speed sqrt(Tr[(d rho)^2] / 2).
double hss(const MatrixDerivative& drho_dphi);

/// HSS of the equal-triple state with relative phase phi along a uniform grid,
/// with chi from central differences (one-sided at the ends).
std::vector<HssSample> hss_series(const PhysicalScenario& scenario, double phi, const std::vector<double>& grid,
                                  double tol = kQuadratureTol);

/// chi by finite differences on an already sampled hss curve.
void fill_chi(std::vector<HssSample>& series);

/// Maximal runs of consecutive samples whose chi signals backflow.
std::vector<std::pair<double, double>> nonmarkov_intervals(const std::vector<HssSample>& series, double threshold,
                                                           HssSignConvention convention = HssSignConvention::Standard);

/// Symmetric logarithmic derivative in the spectral form, with pairs of
/// eigenvalues summing to at most eps dropped.
Eigen::Matrix3cd sld(const QutritDensityMatrix& rho, const MatrixDerivative& drho, double eps = kSpectralCutoff);

/// Max-entry residual of (L rho + rho L)/2 - d rho.
double sld_residual(const QutritDensityMatrix& rho, const MatrixDerivative& drho, const Eigen::Matrix3cd& l);

/// Tr[rho L^2] with L from sld().
double sld_trace_qfi(const QutritDensityMatrix& rho, const MatrixDerivative& drho, double eps = kSpectralCutoff);

/// Two-parameter quantum Fisher information matrix via the spectral double sum.
QfimResult qfim(const QutritDensityMatrix& rho, const MatrixDerivative& drho_theta, const MatrixDerivative& drho_phi,
                double eps = kSpectralCutoff);

/// Tr[F^-1], or +infinity when det F <= 1e-12.
double sigma_min(const QfimResult& f);

/// Fills sigma_min and the single-parameter bounds from the matrix entries.
QfimResult with_bounds(QfimResult f);

}  // namespace qutrit
