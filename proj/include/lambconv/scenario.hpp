#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lambconv/coupling.hpp"
#include "lambconv/ensemble.hpp"
#include "lambconv/hydrogen.hpp"
#include "lambconv/kernels.hpp"
#include "lambconv/units.hpp"

namespace lambconv::scenario {

using kernels::Exec;

// Which n = 2 splitting the microwave drives. The 2s mode always stores
// the excitation and the 2p mode always emits; for the Lamb-shift channel
// the 2s mode lies above its 2p partner.
enum class Channel { kFineStructure, kLambShift };

enum class RatioMode { kPaperUnity, kHydrogenic, kCustom };

std::string_view channel_name(Channel c);
Channel parse_channel(std::string_view name);

struct ChannelModes {
  hydrogen::HydrogenMode ground;
  hydrogen::HydrogenMode reservoir;
  hydrogen::HydrogenMode emitter;
};

ChannelModes channel_modes(Channel c);

// Microwave resonance |w_emitter - w_reservoir| in rad/s, taken from the
// catalog splitting rather than a difference of optical frequencies.
double channel_resonance(Channel c);

// The driven n = 2 pair, ordered upper/lower, at the catalog splitting.
hydrogen::TransitionPair microwave_pair(Channel c, const PhysicalConstants& k = codata());

struct TimeGrid {
  double start = 0.0;  // s
  double stop = 1e-6;  // s
  int steps = 101;

  std::vector<double> points() const;
};

struct ScenarioConfig {
  Channel channel = Channel::kFineStructure;
  double flux_w_cm2 = 1.0;
  double detuning_mhz = 0.0;
  double length_cm = 10.0;
  double area_cm2 = 1.0;
  double gas_density = 0.9e-4;  // g/cm^3
  double rho22_0 = 1e-4;
  RatioMode ratio_mode = RatioMode::kPaperUnity;
  double ratio_value = 1.0;  // used with RatioMode::kCustom
  TimeGrid time;
  double optical_wavelength_nm = 122.0;
  coupling::Lineshape lineshape = coupling::Lineshape::kResonant;
  std::string output;  // empty: standard output

  // Throws ConfigError naming the offending field.
  void validate() const;

  double ratio(const PhysicalConstants& k = codata()) const;
  double drive_frequency_mhz() const;
  ensemble::EnsembleConfig ensemble(const PhysicalConstants& k = codata()) const;
};

// Everything a scenario evaluation needs, resolved once.
struct ScenarioModel {
  ensemble::EnsembleConfig vessel;
  coupling::MicrowaveDrive drive;
  hydrogen::TransitionPair optical;    // emitter -> ground at the nominal wavelength
  hydrogen::TransitionPair microwave;  // the driven n = 2 splitting
  double lambda;                       // damping decrement at the drive frequency
  PhysicalConstants constants;
};

ScenarioModel build_model(const ScenarioConfig& cfg, const PhysicalConstants& k = codata());

struct ScenarioRow {
  double t;
  double beta;
  double f;
  double intensity;  // erg/s
  double eta;
};

ScenarioRow evaluate_at(const ScenarioModel& model, double t);

struct ScenarioSummary {
  Channel channel;
  double microwave_frequency_mhz;
  double drive_frequency_mhz;
  double lambda;
  double ratio;
  double eta_peak;
  double eta_prefactor;  // (3/2pi) N31 ratio rho22_0
  std::optional<double> tau;
  double atom_count;
  double n31;
  double gamma_31;
  double lifetime_31;
  double sigma_max;
};

struct ScenarioResult {
  std::vector<ScenarioRow> rows;
  ScenarioSummary summary;
};

ScenarioResult run_scenario(const ScenarioConfig& cfg, Exec exec = Exec::kParallel,
                            const PhysicalConstants& k = codata());

enum class SweepParameter { kFlux, kRho22, kLength, kGasDensity, kDetuning };
enum class Objective { kEtaMaxPeak, kPulseEnergy, kTau };

std::string_view parameter_name(SweepParameter p);
std::string_view parameter_unit(SweepParameter p);
SweepParameter parse_parameter(std::string_view name);
std::string_view objective_name(Objective o);
std::string_view objective_unit(Objective o);
Objective parse_objective(std::string_view name);

struct SweepSpec {
  SweepParameter parameter = SweepParameter::kFlux;
  double min = 0.0;
  double max = 1.0;
  int steps = 11;
  bool log = false;
  Objective objective = Objective::kEtaMaxPeak;

  void validate() const;
  std::vector<double> grid() const;
};

// Applies one swept value to a copy of the config.
ScenarioConfig with_parameter(ScenarioConfig cfg, SweepParameter p, double value);

// nullopt where the objective is undefined (tau without drive).
std::optional<double> objective_value(const ScenarioConfig& cfg, Objective o,
                                      const PhysicalConstants& k = codata());

struct SweepRow {
  double value;
  std::optional<double> objective;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepRow> rows;
  std::optional<std::size_t> argmax;  // first maximal row
};

// Exhaustive grid search; grid points are independent.
SweepResult run_sweep(const ScenarioConfig& cfg, const SweepSpec& spec,
                      Exec exec = Exec::kParallel, const PhysicalConstants& k = codata());

}  // namespace lambconv::scenario
