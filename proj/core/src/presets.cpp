#include "qutrit/presets.hpp"

#include <cctype>
#include <cstdio>
#include <filesystem>

#include "qutrit/errors.hpp"

namespace qutrit {

namespace {

constexpr double kFreeTmax = 40.0;
constexpr double kPbgTmax = 50.0;
constexpr int kSteps = 2001;

const double kFreeOmegas[] = {0.1, 1.0, 5.0, 10.0};
const double kPbgOmegas[] = {0.1, 0.5, 1.0, 5.0};

struct PhiValue {
  double value;
  const char* label;
};
const PhiValue kPhis[] = {{0.0, "phi0"}, {kPi / 2, "phi_pi2"}, {kPi, "phi_pi"}, {3 * kPi / 2, "phi_3pi2"}};

PhysicalScenario free_space(double omega) { return {Medium::FreeSpace, omega, 0.0}; }
PhysicalScenario band_gap(double omega) { return {Medium::PhotonicBandGap, omega, 0.0}; }

std::string omega_label(double omega) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "omega%g", omega);
  return buf;
}

PresetMember member(std::string panel, std::string label, PhysicalScenario scenario, Quantity q, double theta,
                    double phi) {
  PresetMember m;
  m.panel = std::move(panel);
  m.label = std::move(label);
  m.run.scenario = scenario;
  m.run.init.theta = theta;
  m.run.init.phi = phi;
  m.run.quantity = q;
  m.run.tmax = scenario.medium == Medium::FreeSpace ? kFreeTmax : kPbgTmax;
  m.run.steps = kSteps;
  return m;
}

// Columns I (free space) and II (band gap) swept over the Rabi frequency.
Preset omega_sweep(std::string name, std::string description, Quantity q) {
  Preset p{std::move(name), std::move(description), {}};
  for (double w : kFreeOmegas) p.members.push_back(member("I", omega_label(w), free_space(w), q, kPi / 2, kPi / 4));
  for (double w : kPbgOmegas) p.members.push_back(member("II", omega_label(w), band_gap(w), q, kPi / 2, kPi / 4));
  return p;
}

// Panels swept over the initial phase at theta = pi/2.
Preset phi_sweep(std::string name, std::string description, std::vector<Quantity> qs, std::string free_panel,
                 std::string pbg_panel, double free_omega, double pbg_omega) {
  Preset p{std::move(name), std::move(description), {}};
  for (Quantity q : qs) {
    const std::string suffix = qs.size() > 1 ? "_" + to_string(q) : "";
    for (const PhiValue& phi : kPhis)
      p.members.push_back(member(free_panel, phi.label + suffix, free_space(free_omega), q, kPi / 2, phi.value));
    for (const PhiValue& phi : kPhis)
      p.members.push_back(member(pbg_panel, phi.label + suffix, band_gap(pbg_omega), q, kPi / 2, phi.value));
  }
  return p;
}

std::vector<Preset> build() {
  std::vector<Preset> out;
  out.push_back(omega_sweep("fig2", "coherence vs Omega; theta=pi/2, phi=pi/4; I free space, II band gap delta=0",
                            Quantity::Coherence));
  out.push_back(phi_sweep("fig3", "coherence vs phi; theta=pi/2; a free space Omega=0.5, b band gap Omega=0.5 delta=0",
                          {Quantity::Coherence}, "a", "b", 0.5, 0.5));
  {
    Preset p = omega_sweep("fig4", "HSS of the equal-triple state vs Omega; phi=0; I free space, II band gap delta=0",
                           Quantity::Hss);
    for (auto& m : p.members) m.run.init = {kPi / 2, 0.0, StateFamily::EqualTriple};
    out.push_back(std::move(p));
  }
  {
    Preset p = phi_sweep("fig5", "HSS of the equal-triple state vs phi; a free space Omega=0.5, b band gap Omega=0.5 delta=0",
                         {Quantity::Hss}, "a", "b", 0.5, 0.5);
    for (auto& m : p.members) m.run.init.family = StateFamily::EqualTriple;
    out.push_back(std::move(p));
  }
  out.push_back(omega_sweep("fig6", "F_phi vs Omega; theta=pi/2, phi=pi/4; I free space, II band gap delta=0",
                            Quantity::QfiPhi));
  out.push_back(omega_sweep("fig7", "F_theta vs Omega; theta=pi/2, phi=pi/4; I free space, II band gap delta=0",
                            Quantity::QfiTheta));
  out.push_back(phi_sweep("fig8", "F_phi and F_theta vs phi; theta=pi/2; I free space Omega=0.5, II band gap Omega=0.5 delta=0",
                          {Quantity::QfiPhi, Quantity::QfiTheta}, "I", "II", 0.5, 0.5));
  {
    Preset p{"fig9", "steady-state F_phi (a) and F_theta (b) over theta in [0,pi], phi in [0,2pi); band gap Omega=0.5 delta=0", {}};
    for (auto [panel, q] : {std::pair{"a", GridQuantity::SteadyFPhi}, std::pair{"b", GridQuantity::SteadyFTheta}}) {
      PresetMember m;
      m.panel = panel;
      m.label = to_string(q);
      m.is_grid = true;
      m.grid.scenario = band_gap(0.5);
      m.grid.quantity = q;
      p.members.push_back(m);
    }
    out.push_back(std::move(p));
  }
  out.push_back(omega_sweep("fig10", "Sigma_min vs Omega; theta=pi/2, phi=pi/4; I free space, II band gap delta=0",
                            Quantity::SigmaMin));
  out.push_back(phi_sweep("fig11", "Sigma_min vs phi; theta=pi/2; a free space Omega=0.1, b band gap Omega=0.5 delta=0",
                          {Quantity::SigmaMin}, "a", "b", 0.1, 0.5));
  return out;
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = build();
  return all;
}

Preset find_preset(const std::string& raw) {
  const std::string name = lower(raw);
  // Longest preset name that prefixes the request wins (fig10 before fig1).
  const Preset* best = nullptr;
  for (const Preset& p : presets())
    if (name.rfind(p.name, 0) == 0 && (!best || p.name.size() > best->name.size())) best = &p;
  if (!best) throw ValidationError({"unknown preset '" + raw + "' (expected fig2 ... fig11)"});

  std::string panel = name.substr(best->name.size());
  if (!panel.empty() && panel[0] == '-') panel.erase(0, 1);
  if (panel.empty()) return *best;

  Preset out{best->name, best->description, {}};
  for (const PresetMember& m : best->members)
    if (lower(m.panel) == panel) out.members.push_back(m);
  if (out.members.empty()) throw ValidationError({"preset " + best->name + " has no panel '" + panel + "'"});
  out.name += out.members.front().panel;
  return out;
}

std::string list_presets() {
  std::string out;
  char line[256];
  for (const Preset& p : presets()) {
    out += p.name + ": " + p.description + "\n";
    for (const PresetMember& m : p.members) {
      if (m.is_grid) {
        std::snprintf(line, sizeof(line), "  %-3s %-18s medium=pbg omega=%g delta=%g quantity=%s grid=%dx%d\n",
                      m.panel.c_str(), m.label.c_str(), m.grid.scenario.rabi, m.grid.scenario.detuning,
                      to_string(m.grid.quantity).c_str(), m.grid.theta_points, m.grid.phi_points);
      } else {
        const RunRequest& r = m.run;
        std::snprintf(line, sizeof(line),
                      "  %-3s %-18s medium=%s omega=%g delta=%g theta=%.6g phi=%.6g family=%s quantity=%s tmax=%g "
                      "steps=%d\n",
                      m.panel.c_str(), m.label.c_str(), to_string(r.scenario.medium).c_str(), r.scenario.rabi,
                      r.scenario.detuning, r.init.theta, r.init.phi, to_string(r.init.family).c_str(),
                      to_string(r.quantity).c_str(), r.tmax, r.steps);
      }
      out += line;
    }
  }
  return out;
}

std::vector<std::string> run_preset(const Preset& preset, const std::string& dir, bool oracle_check,
                                    unsigned workers) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir + ": " + ec.message());
  std::vector<std::string> written;
  for (const PresetMember& m : preset.members) {
    const std::string path =
        (std::filesystem::path(dir) / (preset.name + "_" + m.panel + "_" + m.label + ".csv")).string();
    CsvTable table;
    if (m.is_grid) {
      GridRequest g = m.grid;
      g.workers = workers;
      table = simulate_grid(g);
    } else {
      RunRequest r = m.run;
      r.oracle_check = oracle_check;
      r.workers = workers;
      table = simulate(r);
    }
    table.metadata.insert(table.metadata.begin(), {"preset", preset.name + " " + m.panel + " " + m.label});
    write_csv(table, path);
    written.push_back(path);
  }
  return written;
}

}  // namespace qutrit
