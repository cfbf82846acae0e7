#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "qutrit/errors.hpp"
#include "qutrit/types.hpp"

namespace qutrit {

/// Flat key -> value configuration as read from CLI flags or a config file.
using RawConfig = std::map<std::string, std::string>;

/// Validates the scenario keys (medium, omega, delta) of a raw configuration.
/// Throws ValidationError listing every violated constraint.
PhysicalScenario scenario_validate(const RawConfig& raw);

/// Validates theta, phi and family. Missing keys take defaults
/// (theta = pi/2, phi = 0, two-level family).
InitialState initial_state_validate(const RawConfig& raw);

/// Inverse of scenario_validate: re-validating the result yields an equal
/// scenario.
RawConfig scenario_serialize(const PhysicalScenario& scenario);
RawConfig initial_state_serialize(const InitialState& init);

/// Parses flat `key = value` text. Blank lines and `#` comments are skipped.
/// Throws ValidationError on malformed lines.
RawConfig parse_config_text(const std::string& text);
RawConfig load_config_file(const std::filesystem::path& path);

std::string to_string(Medium medium);
std::string to_string(StateFamily family);

/// Formats a double with 17 significant digits.
std::string format_double(double value);

/// Parses a real number, accepting `pi` multiples such as `pi/4`, `3pi/2`
/// or `0.5*pi`. Returns false if the text is not a finite number.
bool parse_real(const std::string& text, double& out);

}  // namespace qutrit
