#pragma once

#include <string>
#include <vector>

#include "qutrit/simulation.hpp"

namespace qutrit {

/// One curve (or one map) of a figure preset.
struct PresetMember {
  /// Figure column or panel: "I", "II", "a", "b", ...
  std::string panel;
  /// Distinguishes curves within a panel, e.g. "omega0.5" or "phi_pi2".
  std::string label;
  bool is_grid = false;
  RunRequest run;
  GridRequest grid;
};

struct Preset {
  std::string name;
  std::string description;
  std::vector<PresetMember> members;
};

/// Presets fig2 ... fig11, one per figure.
const std::vector<Preset>& presets();

/// Looks up "figN", optionally followed by a panel ("fig3b", "fig2-I"), in
/// which case only that panel's members are kept. Throws ValidationError.
Preset find_preset(const std::string& name);

/// Human-readable table of every preset and member.
std::string list_presets();

/// Runs every member, writing <dir>/<name>_<panel>_<label>.csv. Returns the
/// paths written.
std::vector<std::string> run_preset(const Preset& preset, const std::string& dir, bool oracle_check = false,
                                    unsigned workers = 0);

}  // namespace qutrit
