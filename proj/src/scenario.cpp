#include "lambconv/scenario.hpp"

#include <cmath>
#include <string>

#include "lambconv/dynamics.hpp"
#include "lambconv/errors.hpp"

namespace lambconv::scenario {

namespace {

using hydrogen::ModeLabel;

[[noreturn]] void field_error(std::string_view field, std::string_view constraint) {
  throw ConfigError("field " + std::string(field) + ": " + std::string(constraint));
}

}  // namespace

std::string_view channel_name(Channel c) {
  return c == Channel::kFineStructure ? "fine_structure" : "lamb_shift";
}

Channel parse_channel(std::string_view name) {
  if (name == "fine_structure") return Channel::kFineStructure;
  if (name == "lamb_shift") return Channel::kLambShift;
  throw ConfigError("unknown channel '" + std::string(name) +
                    "' (expected fine_structure or lamb_shift)");
}

ChannelModes channel_modes(Channel c) {
  const auto& emitter = hydrogen::mode(c == Channel::kFineStructure ? ModeLabel::k2p_3_2
                                                                    : ModeLabel::k2p_1_2);
  return {hydrogen::mode(ModeLabel::k1s_1_2), hydrogen::mode(ModeLabel::k2s_1_2), emitter};
}

double channel_resonance(Channel c) {
  return freq_mhz_to_angular(c == Channel::kFineStructure ? hydrogen::kFineStructureMhz
                                                          : hydrogen::kLambShiftMhz);
}

hydrogen::TransitionPair microwave_pair(Channel c, const PhysicalConstants& k) {
  const auto modes = channel_modes(c);
  const bool emitter_above = modes.emitter.omega > modes.reservoir.omega;
  const auto& upper = emitter_above ? modes.emitter : modes.reservoir;
  const auto& lower = emitter_above ? modes.reservoir : modes.emitter;
  return hydrogen::make_transition_pair(upper, lower, channel_resonance(c),
                                        hydrogen::dipole_matrix_element(upper, lower, k), k);
}

std::vector<double> TimeGrid::points() const { return kernels::linear_grid(start, stop, steps); }

void ScenarioConfig::validate() const {
  if (!(flux_w_cm2 >= 0.0) || !std::isfinite(flux_w_cm2)) field_error("flux_w_cm2", "must be >= 0");
  if (!std::isfinite(detuning_mhz)) field_error("detuning_mhz", "must be finite");
  if (!(length_cm > 0.0)) field_error("L_cm", "must be > 0");
  if (!(area_cm2 > 0.0)) field_error("F_cm2", "must be > 0");
  if (!(gas_density > 0.0)) field_error("rho_H_g_cm3", "must be > 0");
  if (!(rho22_0 >= 0.0 && rho22_0 <= 1.0)) field_error("rho22_0", "must lie in [0, 1]");
  if (ratio_mode == RatioMode::kCustom && !(ratio_value >= 0.0 && std::isfinite(ratio_value))) {
    field_error("ratio", "must be >= 0");
  }
  if (!(time.start >= 0.0)) field_error("t_start_s", "must be >= 0");
  if (!(time.stop > time.start)) field_error("t_stop_s", "must be > t_start_s");
  if (time.steps < 2) field_error("t_steps", "must be >= 2");
  if (!(optical_wavelength_nm > 0.0)) field_error("optical_wavelength_nm", "must be > 0");
  if (!(drive_frequency_mhz() > 0.0)) {
    field_error("detuning_mhz", "drive frequency (resonance + detuning) must be > 0");
  }
}

double ScenarioConfig::ratio(const PhysicalConstants& k) const {
  switch (ratio_mode) {
    case RatioMode::kPaperUnity: return 1.0;
    case RatioMode::kHydrogenic: return hydrogen::hydrogenic_dipole_ratio(k);
    case RatioMode::kCustom: return ratio_value;
  }
  return ratio_value;
}

double ScenarioConfig::drive_frequency_mhz() const {
  return angular_to_freq_mhz(channel_resonance(channel)) + detuning_mhz;
}

ensemble::EnsembleConfig ScenarioConfig::ensemble(const PhysicalConstants& k) const {
  ensemble::EnsembleConfig e;
  e.length = length_cm;
  e.area = area_cm2;
  e.gas_density = gas_density;
  e.rho22_0 = rho22_0;
  e.ratio = ratio(k);
  e.lambda_31 = optical_wavelength_nm * kNanometre;
  return e;
}

ScenarioModel build_model(const ScenarioConfig& cfg, const PhysicalConstants& k) {
  cfg.validate();
  const auto modes = channel_modes(cfg.channel);
  const auto vessel = cfg.ensemble(k);

  const double omega_31 = wavelength_to_angular(vessel.lambda_31, k);
  const double d31 = hydrogen::dipole_matrix_element(modes.emitter, modes.ground, k);
  const auto optical = hydrogen::make_transition_pair(modes.emitter, modes.ground, omega_31, d31, k);

  const auto microwave = microwave_pair(cfg.channel, k);

  const double omega_drive = freq_mhz_to_angular(cfg.drive_frequency_mhz());
  const auto drive = coupling::MicrowaveDrive::from_flux(flux_si_to_cgs(cfg.flux_w_cm2), omega_drive, k);
  const double lambda =
      coupling::damping_decrement(cfg.lineshape, omega_drive, microwave.omega_nk, optical.gamma_nk);
  return {vessel, drive, optical, microwave, lambda, k};
}

ScenarioRow evaluate_at(const ScenarioModel& m, double t) {
  const auto& v = m.vessel;
  ScenarioRow row{};
  row.t = t;
  row.beta = ensemble::beta_of(m.drive, v.ratio, v.lambda_31, m.lambda, t, m.constants);
  row.f = ensemble::f_beta(row.beta);
  row.intensity = ensemble::total_intensity(v, m.drive, m.lambda, t, m.constants);
  row.eta = m.drive.flux() > 0.0 ? row.intensity / (v.area * m.drive.flux()) : 0.0;
  return row;
}

ScenarioResult run_scenario(const ScenarioConfig& cfg, Exec exec, const PhysicalConstants& k) {
  const auto model = build_model(cfg, k);
  const auto times = cfg.time.points();

  ScenarioResult result;
  result.rows = kernels::evaluate_grid(times, [&](double t) { return evaluate_at(model, t); }, exec);

  const auto& v = model.vessel;
  auto& s = result.summary;
  s.channel = cfg.channel;
  s.microwave_frequency_mhz = angular_to_freq_mhz(model.microwave.omega_nk);
  s.drive_frequency_mhz = cfg.drive_frequency_mhz();
  s.lambda = model.lambda;
  s.ratio = v.ratio;
  s.eta_peak = evaluate_at(model, 0.0).eta;
  s.n31 = v.n31(k);
  s.eta_prefactor = (3.0 / (2.0 * kPi)) * s.n31 * v.ratio * v.rho22_0;
  s.tau = ensemble::depletion_time(model.drive, v.ratio, v.lambda_31, model.lambda, k);
  s.atom_count = v.atom_count(k);
  s.gamma_31 = model.optical.gamma_nk;
  s.lifetime_31 = model.optical.lifetime();
  s.sigma_max = ensemble::sigma_max(v, 0.0, k);
  return result;
}

std::string_view parameter_name(SweepParameter p) {
  switch (p) {
    case SweepParameter::kFlux: return "flux_w_cm2";
    case SweepParameter::kRho22: return "rho22_0";
    case SweepParameter::kLength: return "L_cm";
    case SweepParameter::kGasDensity: return "rho_H_g_cm3";
    case SweepParameter::kDetuning: return "detuning_mhz";
  }
  return "?";
}

std::string_view parameter_unit(SweepParameter p) {
  switch (p) {
    case SweepParameter::kFlux: return "W/cm^2";
    case SweepParameter::kRho22: return "1";
    case SweepParameter::kLength: return "cm";
    case SweepParameter::kGasDensity: return "g/cm^3";
    case SweepParameter::kDetuning: return "MHz";
  }
  return "?";
}

SweepParameter parse_parameter(std::string_view name) {
  for (auto p : {SweepParameter::kFlux, SweepParameter::kRho22, SweepParameter::kLength,
                 SweepParameter::kGasDensity, SweepParameter::kDetuning}) {
    if (parameter_name(p) == name) return p;
  }
  throw ConfigError("unknown sweep parameter '" + std::string(name) +
                    "' (expected flux_w_cm2, rho22_0, L_cm, rho_H_g_cm3 or detuning_mhz)");
}

std::string_view objective_name(Objective o) {
  switch (o) {
    case Objective::kEtaMaxPeak: return "eta_max_peak";
    case Objective::kPulseEnergy: return "pulse_energy";
    case Objective::kTau: return "tau";
  }
  return "?";
}

std::string_view objective_unit(Objective o) {
  switch (o) {
    case Objective::kEtaMaxPeak: return "1";
    case Objective::kPulseEnergy: return "erg";
    case Objective::kTau: return "s";
  }
  return "?";
}

Objective parse_objective(std::string_view name) {
  for (auto o : {Objective::kEtaMaxPeak, Objective::kPulseEnergy, Objective::kTau}) {
    if (objective_name(o) == name) return o;
  }
  throw ConfigError("unknown objective '" + std::string(name) +
                    "' (expected eta_max_peak, pulse_energy or tau)");
}

void SweepSpec::validate() const {
  if (!(min < max) || !std::isfinite(min) || !std::isfinite(max)) {
    throw ConfigError("sweep range: min must be < max");
  }
  if (steps < 2) throw ConfigError("sweep steps must be >= 2");
  if (log && !(min > 0.0)) throw ConfigError("logarithmic sweep needs min > 0");
}

std::vector<double> SweepSpec::grid() const {
  validate();
  return log ? kernels::log_grid(min, max, steps) : kernels::linear_grid(min, max, steps);
}

ScenarioConfig with_parameter(ScenarioConfig cfg, SweepParameter p, double value) {
  switch (p) {
    case SweepParameter::kFlux: cfg.flux_w_cm2 = value; break;
    case SweepParameter::kRho22: cfg.rho22_0 = value; break;
    case SweepParameter::kLength: cfg.length_cm = value; break;
    case SweepParameter::kGasDensity: cfg.gas_density = value; break;
    case SweepParameter::kDetuning: cfg.detuning_mhz = value; break;
  }
  return cfg;
}

std::optional<double> objective_value(const ScenarioConfig& cfg, Objective o,
                                      const PhysicalConstants& k) {
  const auto model = build_model(cfg, k);
  switch (o) {
    case Objective::kEtaMaxPeak:
      return evaluate_at(model, 0.0).eta;
    case Objective::kPulseEnergy:
      return ensemble::emitted_energy(model.vessel, model.drive, model.lambda, cfg.time.stop, k);
    case Objective::kTau:
      return ensemble::depletion_time(model.drive, model.vessel.ratio, model.vessel.lambda_31,
                                      model.lambda, k);
  }
  return std::nullopt;
}

SweepResult run_sweep(const ScenarioConfig& cfg, const SweepSpec& spec, Exec exec,
                      const PhysicalConstants& k) {
  cfg.validate();
  const auto grid = spec.grid();
  SweepResult result{spec, {}, std::nullopt};
  result.rows = kernels::evaluate_grid(
      grid,
      [&](double v) {
        return SweepRow{v, objective_value(with_parameter(cfg, spec.parameter, v), spec.objective, k)};
      },
      exec);

  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    const auto& obj = result.rows[i].objective;
    if (!obj) continue;
    if (!result.argmax || *obj > *result.rows[*result.argmax].objective) result.argmax = i;
  }
  return result;
}

}  // namespace lambconv::scenario
