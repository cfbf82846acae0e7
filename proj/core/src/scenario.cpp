#include "qutrit/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qutrit {

namespace {

std::string trim(const std::string& s) {
  auto begin = std::find_if_not(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
  auto end = std::find_if_not(s.rbegin(), s.rend(), [](unsigned char c) { return std::isspace(c); }).base();
  return begin < end ? std::string(begin, end) : std::string{};
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool parse_plain(const std::string& text, double& out) {
  if (text.empty()) return false;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last && std::isfinite(out);
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> problems)
    : Error([&] {
        std::string msg = "invalid configuration:";
        for (const auto& p : problems) msg += "\n  - " + p;
        return msg;
      }()),
      problems_(std::move(problems)) {}

bool parse_real(const std::string& raw, double& out) {
  std::string text;
  for (char c : lower(raw))
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  const auto pos = text.find("pi");
  if (pos == std::string::npos) return parse_plain(text, out);

  std::string prefix = text.substr(0, pos);
  const std::string suffix = text.substr(pos + 2);
  if (!prefix.empty() && prefix.back() == '*') prefix.pop_back();
  double scale = 1.0;
  if (prefix == "-") {
    scale = -1.0;
  } else if (!prefix.empty() && prefix != "+" && !parse_plain(prefix, scale)) {
    return false;
  }
  double divisor = 1.0;
  if (!suffix.empty()) {
    if (suffix[0] != '/' || !parse_plain(suffix.substr(1), divisor) || divisor == 0.0) return false;
  }
  out = scale * kPi / divisor;
  return std::isfinite(out);
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string to_string(Medium medium) {
  return medium == Medium::FreeSpace ? "free" : "pbg";
}

std::string to_string(StateFamily family) {
  return family == StateFamily::TwoLevelSuperposition ? "two-level" : "equal-triple";
}

Complex InitialState::a0() const {
  if (family == StateFamily::EqualTriple) return {1.0 / std::sqrt(3.0), 0.0};
  return {std::cos(theta / 2), 0.0};
}

Complex InitialState::b0() const {
  const Complex phase = std::polar(1.0, phi);
  if (family == StateFamily::EqualTriple) return phase / std::sqrt(3.0);
  return phase * std::sin(theta / 2);
}

PhysicalScenario scenario_validate(const RawConfig& raw) {
  std::vector<std::string> problems;
  PhysicalScenario scenario;

  bool medium_known = false;
  if (auto it = raw.find("medium"); it == raw.end()) {
    problems.emplace_back("missing key 'medium' (expected 'free' or 'pbg')");
  } else {
    const std::string m = lower(trim(it->second));
    if (m == "free" || m == "freespace" || m == "free-space" || m == "free_space") {
      scenario.medium = Medium::FreeSpace;
      medium_known = true;
    } else if (m == "pbg" || m == "photonic-band-gap" || m == "bandgap" || m == "band-gap") {
      scenario.medium = Medium::PhotonicBandGap;
      medium_known = true;
    } else {
      problems.push_back("unknown medium '" + it->second + "' (expected 'free' or 'pbg')");
    }
  }

  if (auto it = raw.find("omega"); it == raw.end()) {
    problems.emplace_back("missing key 'omega' (Rabi frequency)");
  } else if (!parse_real(it->second, scenario.rabi)) {
    problems.push_back("omega '" + it->second + "' is not a finite number");
  } else if (scenario.rabi < 0.0) {
    problems.push_back("omega must be >= 0, got " + it->second);
  }

  if (auto it = raw.find("delta"); it != raw.end()) {
    if (medium_known && scenario.medium == Medium::FreeSpace) {
      problems.emplace_back("delta (band-edge detuning) is only meaningful for medium 'pbg'");
    } else if (!parse_real(it->second, scenario.detuning)) {
      problems.push_back("delta '" + it->second + "' is not a finite number");
    }
  }

  if (!problems.empty()) throw ValidationError(std::move(problems));
  return scenario;
}

InitialState initial_state_validate(const RawConfig& raw) {
  std::vector<std::string> problems;
  InitialState init;

  if (auto it = raw.find("family"); it != raw.end()) {
    const std::string f = lower(trim(it->second));
    if (f == "two-level" || f == "two_level" || f == "twolevel" || f == "superposition") {
      init.family = StateFamily::TwoLevelSuperposition;
    } else if (f == "equal-triple" || f == "equal_triple" || f == "triple") {
      init.family = StateFamily::EqualTriple;
    } else {
      problems.push_back("unknown family '" + it->second + "' (expected 'two-level' or 'equal-triple')");
    }
  }
  if (auto it = raw.find("theta"); it != raw.end()) {
    if (!parse_real(it->second, init.theta)) {
      problems.push_back("theta '" + it->second + "' is not a finite number");
    } else if (init.theta < 0.0 || init.theta > kPi * (1 + 1e-15)) {
      problems.push_back("theta must lie in [0, pi], got " + it->second);
    } else {
      init.theta = std::min(init.theta, kPi);
    }
  }
  if (auto it = raw.find("phi"); it != raw.end()) {
    if (!parse_real(it->second, init.phi)) {
      problems.push_back("phi '" + it->second + "' is not a finite number");
    } else if (init.phi < 0.0 || init.phi >= 2 * kPi) {
      problems.push_back("phi must lie in [0, 2pi), got " + it->second);
    }
  }

  if (!problems.empty()) throw ValidationError(std::move(problems));
  return init;
}

RawConfig scenario_serialize(const PhysicalScenario& scenario) {
  RawConfig out{{"medium", to_string(scenario.medium)}, {"omega", format_double(scenario.rabi)}};
  if (scenario.medium == Medium::PhotonicBandGap) out["delta"] = format_double(scenario.detuning);
  return out;
}

RawConfig initial_state_serialize(const InitialState& init) {
  return {{"theta", format_double(init.theta)},
          {"phi", format_double(init.phi)},
          {"family", to_string(init.family)}};
}

RawConfig parse_config_text(const std::string& text) {
  RawConfig out;
  std::vector<std::string> problems;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      problems.push_back("line " + std::to_string(number) + ": expected 'key = value'");
      continue;
    }
    const std::string key = lower(trim(line.substr(0, eq)));
    if (key.empty()) {
      problems.push_back("line " + std::to_string(number) + ": empty key");
      continue;
    }
    out[key] = trim(line.substr(eq + 1));
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
  return out;
}

RawConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace qutrit
