#pragma once

#include <string>
#include <vector>

#include "qutrit/csv.hpp"
#include "qutrit/quantifiers.hpp"
#include "qutrit/scenario.hpp"
#include "qutrit/types.hpp"

namespace qutrit {

enum class Quantity { Amplitudes, Coherence, Hss, Chi, QfiTheta, QfiPhi, Qfim, SigmaMin };
enum class GridQuantity { SteadyFTheta, SteadyFPhi, SteadyCoherence };

std::string to_string(Quantity q);
std::string to_string(GridQuantity q);
/// Throw ValidationError on unknown names.
Quantity parse_quantity(const std::string& name);
GridQuantity parse_grid_quantity(const std::string& name);

/// One time series for one scenario and initial state.
///
/// The hss and chi quantities always use the equal-triple family with the
/// requested phi; the Fisher-information quantities need the two-level family.
struct RunRequest {
  PhysicalScenario scenario;
  InitialState init;
  Quantity quantity = Quantity::Coherence;
  double tmax = 40.0;
  int steps = 2001;
  std::string output_path = "-";
  bool oracle_check = false;
  double tol = kQuadratureTol;
  HssSignConvention sign_convention = HssSignConvention::Standard;
  /// Worker threads; 0 uses the hardware concurrency.
  unsigned workers = 0;

  /// Throws ValidationError listing every violated constraint.
  void validate() const;
};

/// Steady-state map over (theta, phi) for the band-gap medium.
struct GridRequest {
  PhysicalScenario scenario{Medium::PhotonicBandGap, 0.5, 0.0};
  int theta_points = 101;
  int phi_points = 101;
  GridQuantity quantity = GridQuantity::SteadyFPhi;
  /// Start of the averaging window when several non-decaying frequencies
  /// survive; also the time of the sanity comparison with the full evaluation.
  double t_steady = 200.0;
  std::string output_path = "-";
  double tol = kQuadratureTol;
  unsigned workers = 0;

  void validate() const;
};

/// Evenly spaced points 0, tmax/(steps-1), ..., tmax.
std::vector<double> uniform_grid(double tmax, int steps);

/// Long-time values in the band-gap medium from the non-decaying residue
/// terms. When more than one distinct frequency survives the values are
/// averaged over 256 samples of a window starting at t_steady.
struct SteadyValues {
  double f_theta = 0.0;
  double f_phi = 0.0;
  double f_cross = 0.0;
  double coherence = 0.0;
};

class PbgPropagator;
SteadyValues steady_values(const PbgPropagator& propagator, const InitialState& init, double t_steady = 200.0);

/// Computes the table for a request; every emitted density matrix is checked
/// for Hermiticity, unit trace, positivity and purity (ComputationError if
/// any check fails).
CsvTable simulate(const RunRequest& request);
CsvTable simulate_grid(const GridRequest& request);

/// simulate / simulate_grid followed by write_csv to the request's output path.
void run(const RunRequest& request);
void run_grid(const GridRequest& request);

}  // namespace qutrit
