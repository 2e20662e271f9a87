#include "lambconv/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lambconv/errors.hpp"

namespace lambconv::config {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

const std::vector<std::string_view>& known_keys() {
  static const std::vector<std::string_view> keys = {
      "channel",   "flux_w_cm2", "detuning_mhz", "L_cm",    "F_cm2",
      "rho_H_g_cm3", "rho22_0",  "ratio",        "t_start_s", "t_stop_s",
      "t_steps",   "optical_wavelength_nm", "lineshape", "output"};
  return keys;
}

bool is_known(std::string_view key) {
  for (auto k : known_keys()) {
    if (k == key) return true;
  }
  return false;
}

}  // namespace

double parse_number(std::string_view text, std::string_view what) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty() || !std::isfinite(value)) {
    throw ConfigError(std::string(what) + ": '" + std::string(text) + "' is not a number");
  }
  return value;
}

int parse_count(std::string_view text, std::string_view what) {
  text = trim(text);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError(std::string(what) + ": '" + std::string(text) + "' is not an integer");
  }
  return value;
}

scenario::ScenarioConfig parse_config(std::string_view text) {
  std::map<std::string, std::pair<std::string, int>> entries;
  std::vector<std::string> unknown;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": missing key");
    if (value.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": missing value for '" + key + "'");
    }
    if (!is_known(key)) {
      unknown.push_back(key);
      continue;
    }
    if (entries.count(key)) {
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
    entries[key] = {value, line_no};
  }

  if (!unknown.empty()) {
    std::string names;
    for (const auto& k : unknown) names += (names.empty() ? "" : ", ") + k;
    throw ConfigError("unknown key(s): " + names);
  }

  auto find = [&](const char* key) -> const std::string* {
    const auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second.first;
  };
  auto number = [&](const char* key, double& dst) {
    if (const auto* v = find(key)) dst = parse_number(*v, std::string("field ") + key);
  };

  scenario::ScenarioConfig cfg;
  const auto* channel = find("channel");
  if (!channel) throw ConfigError("field channel: required");
  cfg.channel = scenario::parse_channel(*channel);

  number("flux_w_cm2", cfg.flux_w_cm2);
  number("detuning_mhz", cfg.detuning_mhz);
  number("L_cm", cfg.length_cm);
  number("F_cm2", cfg.area_cm2);
  number("rho_H_g_cm3", cfg.gas_density);
  number("rho22_0", cfg.rho22_0);
  number("t_start_s", cfg.time.start);
  number("t_stop_s", cfg.time.stop);
  number("optical_wavelength_nm", cfg.optical_wavelength_nm);
  if (const auto* v = find("t_steps")) cfg.time.steps = parse_count(*v, "field t_steps");

  if (const auto* v = find("ratio")) {
    if (*v == "paper_unity") {
      cfg.ratio_mode = scenario::RatioMode::kPaperUnity;
    } else if (*v == "hydrogenic") {
      cfg.ratio_mode = scenario::RatioMode::kHydrogenic;
    } else {
      cfg.ratio_mode = scenario::RatioMode::kCustom;
      cfg.ratio_value = parse_number(*v, "field ratio");
    }
  }
  if (const auto* v = find("lineshape")) {
    if (*v == "resonant") {
      cfg.lineshape = coupling::Lineshape::kResonant;
    } else if (*v == "full") {
      cfg.lineshape = coupling::Lineshape::kFull;
    } else {
      throw ConfigError("field lineshape: expected resonant or full, got '" + *v + "'");
    }
  }
  if (const auto* v = find("output")) cfg.output = *v;

  cfg.validate();
  return cfg;
}

scenario::ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace lambconv::config
