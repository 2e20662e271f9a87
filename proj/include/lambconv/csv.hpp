#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "lambconv/kernels.hpp"
#include "lambconv/scenario.hpp"
#include "lambconv/units.hpp"

namespace lambconv::csv {

// Scientific notation, 9 significant digits, '.' decimal separator
// regardless of the global locale.
std::string format_number(double v);

inline constexpr const char* kNoDepletion = "no_depletion";

void write_fig1(std::ostream& out, std::span<const kernels::Fig1Row> rows);

void write_scenario(std::ostream& out, const scenario::ScenarioResult& result);
void write_scenario_summary(std::ostream& out, const scenario::ScenarioSummary& s);

void write_sweep(std::ostream& out, const scenario::SweepResult& result);
void write_sweep_summary(std::ostream& out, const scenario::SweepResult& result);

void write_constants(std::ostream& out, const PhysicalConstants& k = codata());
void write_transitions(std::ostream& out, scenario::Channel channel,
                       const PhysicalConstants& k = codata());

}  // namespace lambconv::csv
