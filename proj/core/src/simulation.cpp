#include "qutrit/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "qutrit/errors.hpp"
#include "qutrit/evolution.hpp"
#include "qutrit/oracle.hpp"
#include "qutrit/parallel.hpp"
#include "qutrit/pbg.hpp"
#include "qutrit/state.hpp"

namespace qutrit {

namespace {

struct Names {
  Quantity q;
  const char* name;
};

constexpr Names kQuantityNames[] = {
    {Quantity::Amplitudes, "amplitudes"}, {Quantity::Coherence, "coherence"}, {Quantity::Hss, "hss"},
    {Quantity::Chi, "chi"},               {Quantity::QfiTheta, "qfi_theta"},  {Quantity::QfiPhi, "qfi_phi"},
    {Quantity::Qfim, "qfim"},             {Quantity::SigmaMin, "sigma_min"},
};

struct GridNames {
  GridQuantity q;
  const char* name;
};

constexpr GridNames kGridNames[] = {
    {GridQuantity::SteadyFTheta, "steady_f_theta"},
    {GridQuantity::SteadyFPhi, "steady_f_phi"},
    {GridQuantity::SteadyCoherence, "steady_coherence"},
};

std::vector<std::string> columns_for(Quantity q) {
  switch (q) {
    case Quantity::Amplitudes: return {"re_a", "im_a", "re_b", "im_b"};
    case Quantity::Coherence: return {"coherence"};
    case Quantity::Hss: return {"hss"};
    case Quantity::Chi: return {"chi"};
    case Quantity::QfiTheta: return {"f_theta"};
    case Quantity::QfiPhi: return {"f_phi"};
    case Quantity::Qfim: return {"f_theta", "f_phi", "f_cross"};
    case Quantity::SigmaMin: return {"sigma_min"};
  }
  return {};
}

bool uses_equal_triple(Quantity q) { return q == Quantity::Hss || q == Quantity::Chi; }
bool needs_theta_derivative(Quantity q) {
  return q == Quantity::QfiTheta || q == Quantity::Qfim || q == Quantity::SigmaMin;
}

void check_state(const QutritDensityMatrix& rho, double t) {
  const StateDiagnostics d = diagnose(rho);
  if (!d.valid()) {
    std::ostringstream msg;
    msg << "invalid density matrix at t = " << t << ": hermiticity " << d.hermiticity_error << ", trace error "
        << d.trace_error << ", min eigenvalue " << d.min_eigenvalue << ", purity " << d.purity;
    throw ComputationError(msg.str());
  }
}

bool rabi_invalid(const PhysicalScenario& s) { return !(s.rabi >= 0) || !std::isfinite(s.rabi); }

std::string time_axis(Medium m) { return m == Medium::FreeSpace ? "gamma*t" : "alpha^2*t"; }

void describe(CsvTable& table, const PhysicalScenario& scenario) {
  for (const auto& [k, v] : scenario_serialize(scenario)) table.add_meta(k, v);
  table.add_meta("time_axis", time_axis(scenario.medium));
}

std::string format_intervals(const std::vector<std::pair<double, double>>& intervals) {
  if (intervals.empty()) return "none";
  std::string out;
  for (const auto& [a, b] : intervals) {
    if (!out.empty()) out += ";";
    out += "[" + format_double(a) + "," + format_double(b) + "]";
  }
  return out;
}

}  // namespace

std::string to_string(Quantity q) {
  for (const auto& n : kQuantityNames)
    if (n.q == q) return n.name;
  return "?";
}

std::string to_string(GridQuantity q) {
  for (const auto& n : kGridNames)
    if (n.q == q) return n.name;
  return "?";
}

Quantity parse_quantity(const std::string& name) {
  for (const auto& n : kQuantityNames)
    if (name == n.name) return n.q;
  throw ValidationError({"unknown quantity '" + name + "'"});
}

GridQuantity parse_grid_quantity(const std::string& name) {
  for (const auto& n : kGridNames)
    if (name == n.name) return n.q;
  throw ValidationError({"unknown grid quantity '" + name + "'"});
}

void RunRequest::validate() const {
  std::vector<std::string> problems;
  if (!(tmax > 0) || !std::isfinite(tmax)) problems.push_back("tmax must be a positive number");
  if (steps < 2) problems.push_back("steps must be at least 2");
  if (!(tol > 0)) problems.push_back("tol must be positive");
  if (rabi_invalid(scenario)) problems.push_back("omega must be a finite number >= 0");
  if (needs_theta_derivative(quantity) && init.family != StateFamily::TwoLevelSuperposition)
    problems.push_back("quantity " + to_string(quantity) + " needs the two-level family");
  if (uses_equal_triple(quantity) && steps < 3) problems.push_back("hss and chi need at least 3 steps");
  if (!problems.empty()) throw ValidationError(problems);
}

void GridRequest::validate() const {
  std::vector<std::string> problems;
  if (scenario.medium != Medium::PhotonicBandGap) problems.push_back("grid runs need the pbg medium");
  if (theta_points < 2) problems.push_back("theta points must be at least 2");
  if (phi_points < 2) problems.push_back("phi points must be at least 2");
  if (!(t_steady > 0)) problems.push_back("t_steady must be positive");
  if (!(tol > 0)) problems.push_back("tol must be positive");
  if (rabi_invalid(scenario)) problems.push_back("omega must be a finite number >= 0");
  if (!problems.empty()) throw ValidationError(problems);
}

std::vector<double> uniform_grid(double tmax, int steps) {
  std::vector<double> grid(static_cast<std::size_t>(std::max(steps, 1)));
  for (int i = 0; i < steps; ++i) grid[i] = steps == 1 ? 0.0 : tmax * i / (steps - 1);
  return grid;
}

SteadyValues steady_values(const PbgPropagator& propagator, const InitialState& init, double t_steady) {
  std::vector<double> freqs = propagator.oscillation_frequencies();
  std::sort(freqs.begin(), freqs.end());
  double min_gap = INFINITY;
  for (std::size_t i = 1; i < freqs.size(); ++i) {
    const double gap = freqs[i] - freqs[i - 1];
    if (gap > 1e-9) min_gap = std::min(min_gap, gap);
  }

  std::vector<double> times{t_steady};
  if (std::isfinite(min_gap)) {
    constexpr int kSamples = 256;
    const double window = 20 * 2 * kPi / min_gap;
    times.clear();
    for (int k = 0; k < kSamples; ++k) times.push_back(t_steady + window * k / kSamples);
  }

  SteadyValues out;
  const bool theta_ok = init.family == StateFamily::TwoLevelSuperposition;
  for (double t : times) {
    const FundamentalSolution f = propagator.asymptotic_fundamental(t);
    const QutritDensityMatrix rho = density_matrix(f.apply(init.a0(), init.b0()), init, propagator.tolerance());
    check_state(rho, t);
    out.coherence += l1_coherence(rho);
    const MatrixDerivative dphi = parameter_derivative(f, init, Parameter::Phi);
    const MatrixDerivative dtheta = theta_ok ? parameter_derivative(f, init, Parameter::Theta) : MatrixDerivative::Zero();
    const QfimResult q = qfim(rho, dtheta, dphi);
    out.f_theta += q.f_theta;
    out.f_phi += q.f_phi;
    out.f_cross += q.f_cross;
  }
  const double n = static_cast<double>(times.size());
  out.coherence /= n;
  out.f_theta /= n;
  out.f_phi /= n;
  out.f_cross /= n;
  return out;
}

CsvTable simulate(const RunRequest& request) {
  request.validate();
  InitialState init = request.init;
  if (uses_equal_triple(request.quantity)) init.family = StateFamily::EqualTriple;

  CsvTable table;
  describe(table, request.scenario);
  for (const auto& [k, v] : initial_state_serialize(init)) table.add_meta(k, v);
  table.add_meta("quantity", to_string(request.quantity));
  table.add_meta("tmax", format_double(request.tmax));
  table.add_meta("steps", std::to_string(request.steps));
  table.add_meta("tol", format_double(request.tol));
  table.add_meta("oracle_check", request.oracle_check ? "true" : "false");

  const Evolution evolution(request.scenario, request.tol);
  const double state_tol = evolution.accuracy();
  const std::vector<double> grid = uniform_grid(request.tmax, request.steps);
  std::vector<std::vector<double>> rows(grid.size());
  std::vector<HssSample> hss_samples(grid.size());

  parallel_for(
      grid.size(),
      [&](std::size_t i) {
        const double t = grid[i];
        const FundamentalSolution f = evolution.fundamental(t);
        const AmplitudePair amps = f.apply(init.a0(), init.b0());
        const QutritDensityMatrix rho = density_matrix(amps, init, state_tol);
        check_state(rho, t);
        std::vector<double>& row = rows[i];
        row.push_back(t);
        switch (request.quantity) {
          case Quantity::Amplitudes:
            row.insert(row.end(), {amps.a.real(), amps.a.imag(), amps.b.real(), amps.b.imag()});
            break;
          case Quantity::Coherence:
            row.push_back(l1_coherence(rho));
            break;
          case Quantity::Hss:
          case Quantity::Chi:
            hss_samples[i] = {t, hss(parameter_derivative(f, init, Parameter::Phi)), 0.0};
            break;
          default: {
            const QfimResult q = qfim(rho, parameter_derivative(f, init, Parameter::Theta),
                                      parameter_derivative(f, init, Parameter::Phi));
            if (request.quantity == Quantity::QfiTheta) row.push_back(q.f_theta);
            if (request.quantity == Quantity::QfiPhi) row.push_back(q.f_phi);
            if (request.quantity == Quantity::Qfim) row.insert(row.end(), {q.f_theta, q.f_phi, q.f_cross});
            if (request.quantity == Quantity::SigmaMin) row.push_back(q.sigma_min);
          }
        }
      },
      request.workers);

  if (uses_equal_triple(request.quantity)) {
    fill_chi(hss_samples);
    for (std::size_t i = 0; i < grid.size(); ++i)
      rows[i].push_back(request.quantity == Quantity::Hss ? hss_samples[i].hss : hss_samples[i].chi);
    table.add_meta("hss_sign_convention",
                   request.sign_convention == HssSignConvention::Standard ? "standard" : "reversed");
    table.add_meta("backflow_intervals",
                   format_intervals(nonmarkov_intervals(hss_samples, 1e-4, request.sign_convention)));
  }

  if (request.oracle_check) {
    const bool free = request.scenario.medium == Medium::FreeSpace;
    const double tol = free ? 1e-7 : 1e-6;
    const OracleReport report = free ? crosscheck(request.scenario, init, grid, tol)
                                     : crosscheck(*evolution.pbg(), init, grid, tol);
    table.add_meta("oracle_max_dev_a", format_double(report.max_abs_dev_a));
    table.add_meta("oracle_max_dev_b", format_double(report.max_abs_dev_b));
    if (!report.passed) {
      throw ComputationError("oracle check failed: max deviation " +
                             format_double(std::max(report.max_abs_dev_a, report.max_abs_dev_b)) + " exceeds " +
                             format_double(tol));
    }
  }

  table.add_meta("state_checks", "passed");
  table.columns = {"t"};
  for (const std::string& c : columns_for(request.quantity)) table.columns.push_back(c);
  table.rows = std::move(rows);
  return table;
}

CsvTable simulate_grid(const GridRequest& request) {
  request.validate();
  CsvTable table;
  describe(table, request.scenario);
  table.add_meta("quantity", to_string(request.quantity));
  table.add_meta("theta_points", std::to_string(request.theta_points));
  table.add_meta("phi_points", std::to_string(request.phi_points));
  table.add_meta("t_steady", format_double(request.t_steady));
  table.add_meta("tol", format_double(request.tol));

  const PbgPropagator propagator(request.scenario, request.tol);
  const std::size_t nt = static_cast<std::size_t>(request.theta_points);
  const std::size_t np = static_cast<std::size_t>(request.phi_points);
  std::vector<std::vector<double>> rows(nt * np);
  parallel_for(
      rows.size(),
      [&](std::size_t idx) {
        const std::size_t i = idx / np;
        const std::size_t k = idx % np;
        InitialState init;
        init.theta = kPi * static_cast<double>(i) / static_cast<double>(nt - 1);
        init.phi = 2 * kPi * static_cast<double>(k) / static_cast<double>(np);
        const SteadyValues s = steady_values(propagator, init, request.t_steady);
        double value = s.f_phi;
        if (request.quantity == GridQuantity::SteadyFTheta) value = s.f_theta;
        if (request.quantity == GridQuantity::SteadyCoherence) value = s.coherence;
        rows[idx] = {init.theta, init.phi, value};
      },
      request.workers);

  table.columns = {"theta", "phi", "value"};
  table.rows = std::move(rows);
  return table;
}

void run(const RunRequest& request) { write_csv(simulate(request), request.output_path); }

void run_grid(const GridRequest& request) { write_csv(simulate_grid(request), request.output_path); }

}  // namespace qutrit
