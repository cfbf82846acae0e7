// qutrit: command-line front end for the qutrit dynamics library.
//
// Exit codes: 0 success, 1 validation error, 2 computation error, 3 I/O error.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "qutrit/errors.hpp"
#include "qutrit/oracle.hpp"
#include "qutrit/presets.hpp"
#include "qutrit/scenario.hpp"
#include "qutrit/simulation.hpp"

namespace {

using namespace qutrit;

enum Exit { kOk = 0, kValidation = 1, kComputation = 2, kIo = 3 };

/// String-valued flags that overlay keys of a config file.
struct Flags {
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;

  void add(CLI::App& app, const std::string& key, const std::string& help) {
    options[key] = app.add_option("--" + key, values[key], help);
  }
  void add_alias(CLI::App& app, const std::string& flag, const std::string& key, const std::string& help) {
    options[key] = app.add_option("--" + flag, values[key], help);
  }

  RawConfig merged(const std::string& config_path) const {
    RawConfig raw;
    if (!config_path.empty()) raw = load_config_file(config_path);
    for (const auto& [key, opt] : options)
      if (opt->count() > 0) raw[key] = values.at(key);
    return raw;
  }
};

void collect(std::vector<std::string>& problems, auto&& step) {
  try {
    step();
  } catch (const ValidationError& e) {
    problems.insert(problems.end(), e.problems().begin(), e.problems().end());
  }
}

double real_key(const RawConfig& raw, const std::string& key, double fallback, std::vector<std::string>& problems) {
  auto it = raw.find(key);
  if (it == raw.end()) return fallback;
  double v = 0;
  if (!parse_real(it->second, v)) problems.push_back(key + " '" + it->second + "' is not a finite number");
  return v;
}

int int_key(const RawConfig& raw, const std::string& key, int fallback, std::vector<std::string>& problems) {
  auto it = raw.find(key);
  if (it == raw.end()) return fallback;
  try {
    std::size_t used = 0;
    const int v = std::stoi(it->second, &used);
    if (used == it->second.size()) return v;
  } catch (const std::exception&) {
  }
  problems.push_back(key + " '" + it->second + "' is not an integer");
  return fallback;
}

HssSignConvention parse_convention(const std::string& s, std::vector<std::string>& problems) {
  if (s == "standard") return HssSignConvention::Standard;
  if (s == "reversed") return HssSignConvention::Reversed;
  problems.push_back("hss sign convention must be 'standard' or 'reversed', got '" + s + "'");
  return HssSignConvention::Standard;
}

RunRequest build_run(const RawConfig& raw, bool oracle_check, const std::string& convention) {
  std::vector<std::string> problems;
  RunRequest r;
  collect(problems, [&] { r.scenario = scenario_validate(raw); });
  collect(problems, [&] { r.init = initial_state_validate(raw); });
  if (auto it = raw.find("quantity"); it != raw.end()) collect(problems, [&] { r.quantity = parse_quantity(it->second); });
  r.tmax = real_key(raw, "tmax", r.scenario.medium == Medium::FreeSpace ? 40.0 : 50.0, problems);
  r.steps = int_key(raw, "steps", 2001, problems);
  r.tol = real_key(raw, "tol", kQuadratureTol, problems);
  if (auto it = raw.find("output"); it != raw.end()) r.output_path = it->second;
  r.oracle_check = oracle_check;
  r.sign_convention = parse_convention(convention, problems);
  if (problems.empty()) collect(problems, [&] { r.validate(); });
  if (!problems.empty()) throw ValidationError(problems);
  return r;
}

int report(const std::exception& e, int code) {
  std::fprintf(stderr, "qutrit: %s\n", e.what());
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Driven three-level atom in free space or near a photonic band edge: coherence, "
               "Hilbert-Schmidt speed and quantum Fisher information."};
  app.require_subcommand(1);

  // simulate
  CLI::App* sim = app.add_subcommand("simulate", "Time series for one scenario, or every curve of a figure preset");
  Flags sim_flags;
  std::string sim_config, preset, convention = "standard";
  bool oracle_check = false;
  unsigned workers = 0;
  sim->add_option("--config", sim_config, "Flat key = value configuration file; flags override it");
  sim_flags.add(*sim, "medium", "free or pbg");
  sim_flags.add(*sim, "omega", "Rabi frequency (units of gamma or alpha^2)");
  sim_flags.add(*sim, "delta", "Band-edge detuning (pbg only)");
  sim_flags.add(*sim, "theta", "Initial polar angle in [0, pi]; accepts pi/2 style values");
  sim_flags.add(*sim, "phi", "Initial relative phase in [0, 2pi)");
  sim_flags.add(*sim, "family", "two-level or equal-triple");
  sim_flags.add(*sim, "quantity", "amplitudes, coherence, hss, chi, qfi_theta, qfi_phi, qfim or sigma_min");
  sim_flags.add(*sim, "tmax", "End of the scaled time window");
  sim_flags.add(*sim, "steps", "Number of time points (>= 2)");
  sim_flags.add(*sim, "output", "Output CSV path ('-' for stdout), or directory with --preset");
  sim_flags.add(*sim, "tol", "Quadrature tolerance for the band-gap medium");
  sim->add_flag("--oracle-check", oracle_check, "Compare against the independent oracle; fail on disagreement");
  sim->add_option("--preset", preset, "Run a figure preset (fig2 ... fig11, optionally with a panel, e.g. fig3b)");
  sim->add_option("--hss-sign-convention", convention, "standard (backflow where chi > 0) or reversed (backflow where chi < 0)");
  sim->add_option("--workers", workers, "Worker threads (0 = hardware concurrency)");

  // grid
  CLI::App* grid = app.add_subcommand("grid", "Steady-state map over (theta, phi) in the band-gap medium");
  Flags grid_flags;
  std::string grid_config;
  grid->add_option("--config", grid_config, "Flat key = value configuration file; flags override it");
  grid_flags.add(*grid, "medium", "must be pbg");
  grid_flags.add(*grid, "omega", "Rabi frequency (units of alpha^2)");
  grid_flags.add(*grid, "delta", "Band-edge detuning");
  grid_flags.add_alias(*grid, "theta-points", "theta_points", "Grid points over [0, pi]");
  grid_flags.add_alias(*grid, "phi-points", "phi_points", "Grid points over [0, 2pi)");
  grid_flags.add(*grid, "quantity", "steady_f_theta, steady_f_phi or steady_coherence");
  grid_flags.add_alias(*grid, "t-steady", "t_steady", "Start of the averaging window");
  grid_flags.add(*grid, "output", "Output CSV path ('-' for stdout)");
  grid_flags.add(*grid, "tol", "Quadrature tolerance");
  grid->add_option("--workers", workers, "Worker threads (0 = hardware concurrency)");

  // presets
  CLI::App* list = app.add_subcommand("presets", "List the figure presets and their parameters");

  // crosscheck
  CLI::App* check = app.add_subcommand("crosscheck", "Compare the closed-form amplitudes with the independent oracle");
  Flags check_flags;
  std::string check_config;
  check->add_option("--config", check_config, "Flat key = value configuration file; flags override it");
  const std::pair<const char*, const char*> check_keys[] = {
      {"medium", "free (RK4 oracle) or pbg (contour inversion oracle)"},
      {"omega", "Rabi frequency"},
      {"delta", "Band-edge detuning (pbg only)"},
      {"theta", "Initial polar angle"},
      {"phi", "Initial relative phase"},
      {"family", "two-level or equal-triple"},
      {"tmax", "End of the time window (default 20 free, 50 pbg)"},
      {"steps", "Number of comparison points (default 401 free, 101 pbg)"},
      {"output", "Deviation CSV path ('-' for stdout)"},
      {"tol", "Maximum allowed deviation (default 1e-7 free, 1e-6 pbg)"},
  };
  for (const auto& [key, help] : check_keys) check_flags.add(*check, key, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (*list) {
      std::cout << list_presets();
      return kOk;
    }

    if (*sim) {
      if (!preset.empty()) {
        const Preset p = find_preset(preset);
        std::string dir = sim_flags.options["output"]->count() ? sim_flags.values["output"] : std::string(".");
        for (const std::string& path : run_preset(p, dir, oracle_check, workers)) std::cerr << "wrote " << path << "\n";
        return kOk;
      }
      RunRequest r = build_run(sim_flags.merged(sim_config), oracle_check, convention);
      r.workers = workers;
      run(r);
      return kOk;
    }

    if (*grid) {
      RawConfig raw = grid_flags.merged(grid_config);
      if (!raw.count("medium")) raw["medium"] = "pbg";
      std::vector<std::string> problems;
      GridRequest g;
      collect(problems, [&] { g.scenario = scenario_validate(raw); });
      g.theta_points = int_key(raw, "theta_points", 101, problems);
      g.phi_points = int_key(raw, "phi_points", 101, problems);
      if (auto it = raw.find("quantity"); it != raw.end())
        collect(problems, [&] { g.quantity = parse_grid_quantity(it->second); });
      g.t_steady = real_key(raw, "t_steady", 200.0, problems);
      g.tol = real_key(raw, "tol", kQuadratureTol, problems);
      if (auto it = raw.find("output"); it != raw.end()) g.output_path = it->second;
      g.workers = workers;
      if (problems.empty()) collect(problems, [&] { g.validate(); });
      if (!problems.empty()) throw ValidationError(problems);
      run_grid(g);
      return kOk;
    }

    if (*check) {
      RawConfig raw = check_flags.merged(check_config);
      std::vector<std::string> problems;
      PhysicalScenario scenario;
      InitialState init;
      collect(problems, [&] { scenario = scenario_validate(raw); });
      collect(problems, [&] { init = initial_state_validate(raw); });
      const bool free = scenario.medium == Medium::FreeSpace;
      const double tmax = real_key(raw, "tmax", free ? 20.0 : 50.0, problems);
      const int steps = int_key(raw, "steps", free ? 401 : 101, problems);
      const double tol = real_key(raw, "tol", free ? 1e-7 : 1e-6, problems);
      if (!(tmax > 0)) problems.push_back("tmax must be positive");
      if (steps < 2) problems.push_back("steps must be at least 2");
      if (!problems.empty()) throw ValidationError(problems);

      const OracleReport rep = crosscheck(scenario, init, uniform_grid(tmax, steps), tol);
      CsvTable table;
      for (const auto& [k, v] : scenario_serialize(scenario)) table.add_meta(k, v);
      for (const auto& [k, v] : initial_state_serialize(init)) table.add_meta(k, v);
      table.add_meta("oracle", free ? "rk4" : "talbot");
      table.add_meta("tolerance", format_double(tol));
      table.add_meta("max_abs_dev_a", format_double(rep.max_abs_dev_a));
      table.add_meta("max_abs_dev_b", format_double(rep.max_abs_dev_b));
      table.add_meta("passed", rep.passed ? "true" : "false");
      table.columns = {"t", "dev_a", "dev_b"};
      for (std::size_t i = 0; i < rep.grid.size(); ++i) table.rows.push_back({rep.grid[i], rep.dev_a[i], rep.dev_b[i]});
      write_csv(table, raw.count("output") ? raw["output"] : std::string("-"));
      if (!rep.passed) {
        std::fprintf(stderr, "qutrit: crosscheck failed (max deviation A %.3e, B %.3e, tolerance %.1e)\n",
                     rep.max_abs_dev_a, rep.max_abs_dev_b, tol);
        return kComputation;
      }
      return kOk;
    }
  } catch (const ValidationError& e) {
    return report(e, kValidation);
  } catch (const IoError& e) {
    return report(e, kIo);
  } catch (const ComputationError& e) {
    return report(e, kComputation);
  } catch (const std::exception& e) {
    return report(e, kComputation);
  }
  return kOk;
}
