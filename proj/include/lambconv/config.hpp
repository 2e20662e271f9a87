#pragma once

#include <filesystem>
#include <string_view>

#include "lambconv/scenario.hpp"

namespace lambconv::config {

// Flat `key = value` document, one entry per line, `#` starts a comment.
// Only `channel` is required. Recognised keys:
//
//   channel                fine_structure | lamb_shift
//   flux_w_cm2             microwave flux, W/cm^2
//   detuning_mhz           drive detuning from the channel resonance, MHz
//   L_cm, F_cm2            vessel length and cross-section
//   rho_H_g_cm3            hydrogen density
//   rho22_0                initial excitation of the 2s mode
//   ratio                  paper_unity | hydrogenic | <number>
//   t_start_s, t_stop_s, t_steps
//   optical_wavelength_nm  default 122
//   lineshape              resonant | full
//   output                 CSV path
//
// Errors are ConfigError: syntax problems name the line, unknown keys are
// listed together, and validation failures name the field.
scenario::ScenarioConfig parse_config(std::string_view text);

scenario::ScenarioConfig load_config(const std::filesystem::path& path);

// Locale-independent strict number parsing; throws ConfigError mentioning `what`.
double parse_number(std::string_view text, std::string_view what);
int parse_count(std::string_view text, std::string_view what);

}  // namespace lambconv::config
