#include "lambconv/csv.hpp"

#include <fmt/format.h>

#include "lambconv/hydrogen.hpp"

namespace lambconv::csv {

namespace {

std::string format_optional(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string(kNoDepletion);
}

void kv(std::ostream& out, std::string_view key, std::string_view value) {
  out << key << " = " << value << '\n';
}

void kv(std::ostream& out, std::string_view key, double value) { kv(out, key, format_number(value)); }

}  // namespace

std::string format_number(double v) { return fmt::format("{:.8e}", v); }

void write_fig1(std::ostream& out, std::span<const kernels::Fig1Row> rows) {
  out << "beta [1],f_exact [1],f_small_approx [1],f_large_approx [1]\n";
  for (const auto& r : rows) {
    out << format_number(r.beta) << ',' << format_number(r.f_exact) << ','
        << format_number(r.f_small) << ',' << format_number(r.f_large) << '\n';
  }
}

void write_scenario(std::ostream& out, const scenario::ScenarioResult& result) {
  const std::string f_mw = format_number(result.summary.drive_frequency_mhz);
  out << "t [s],f_mw [MHz],beta [1],f_beta [1],intensity [erg/s],eta [1]\n";
  for (const auto& r : result.rows) {
    out << format_number(r.t) << ',' << f_mw << ',' << format_number(r.beta) << ','
        << format_number(r.f) << ',' << format_number(r.intensity) << ','
        << format_number(r.eta) << '\n';
  }
}

void write_scenario_summary(std::ostream& out, const scenario::ScenarioSummary& s) {
  kv(out, "channel", scenario::channel_name(s.channel));
  kv(out, "microwave_frequency_mhz", s.microwave_frequency_mhz);
  kv(out, "drive_frequency_mhz", s.drive_frequency_mhz);
  kv(out, "lambda", s.lambda);
  kv(out, "dipole_ratio", s.ratio);
  kv(out, "eta_peak", s.eta_peak);
  kv(out, "eta_prefactor", s.eta_prefactor);
  kv(out, "tau_s", format_optional(s.tau));
  kv(out, "atom_count", s.atom_count);
  kv(out, "n31", s.n31);
  kv(out, "gamma_31_per_s", s.gamma_31);
  kv(out, "lifetime_31_s", s.lifetime_31);
  kv(out, "sigma_max_cm2", s.sigma_max);
}

void write_sweep(std::ostream& out, const scenario::SweepResult& result) {
  const auto& spec = result.spec;
  out << scenario::parameter_name(spec.parameter) << " [" << scenario::parameter_unit(spec.parameter)
      << "]," << scenario::objective_name(spec.objective) << " ["
      << scenario::objective_unit(spec.objective) << "]\n";
  for (const auto& r : result.rows) {
    out << format_number(r.value) << ',' << format_optional(r.objective) << '\n';
  }
}

void write_sweep_summary(std::ostream& out, const scenario::SweepResult& result) {
  kv(out, "parameter", scenario::parameter_name(result.spec.parameter));
  kv(out, "objective", scenario::objective_name(result.spec.objective));
  if (!result.argmax) {
    kv(out, "argmax", "none");
    return;
  }
  const auto& row = result.rows[*result.argmax];
  kv(out, "argmax_index", std::to_string(*result.argmax));
  kv(out, "argmax_value", row.value);
  kv(out, "objective_max", *row.objective);
}

void write_constants(std::ostream& out, const PhysicalConstants& k) {
  kv(out, "hbar_erg_s", k.hbar());
  kv(out, "c_cm_per_s", k.c());
  kv(out, "e_statC", k.e());
  kv(out, "a0_cm", k.a0());
  kv(out, "mu_H_g", k.mu_H());
  kv(out, "fine_structure_constant", k.fine_structure());
}

void write_transitions(std::ostream& out, scenario::Channel channel, const PhysicalConstants& k) {
  const auto modes = scenario::channel_modes(channel);
  const auto optical = hydrogen::make_transition_pair(modes.emitter, modes.ground, k);
  const auto microwave = scenario::microwave_pair(channel, k);

  kv(out, "channel", scenario::channel_name(channel));
  kv(out, "reservoir_mode", modes.reservoir.name());
  kv(out, "emitter_mode", modes.emitter.name());
  kv(out, "ground_mode", modes.ground.name());

  kv(out, "microwave_upper", microwave.upper.name());
  kv(out, "microwave_lower", microwave.lower.name());
  kv(out, "microwave_omega_rad_per_s", microwave.omega_nk);
  kv(out, "microwave_frequency_mhz", angular_to_freq_mhz(microwave.omega_nk));
  kv(out, "microwave_dipole_statC_cm", microwave.d_nk);
  kv(out, "microwave_dipole_e_a0", microwave.d_nk / (k.e() * k.a0()));
  kv(out, "microwave_gamma_per_s", microwave.gamma_nk);

  kv(out, "optical_omega_rad_per_s", optical.omega_nk);
  kv(out, "optical_wavelength_nm", angular_to_wavelength(optical.omega_nk, k) / kNanometre);
  kv(out, "optical_dipole_statC_cm", optical.d_nk);
  kv(out, "optical_dipole_e_a0", optical.d_nk / (k.e() * k.a0()));
  kv(out, "optical_gamma_per_s", optical.gamma_nk);
  kv(out, "optical_population_decay_rate_per_s", hydrogen::population_decay_rate(optical.gamma_nk));
  kv(out, "optical_lifetime_s", optical.lifetime());

  const double ratio = (microwave.d_nk * microwave.d_nk) / (optical.d_nk * optical.d_nk);
  kv(out, "hydrogenic_dipole_ratio", ratio);
}

}  // namespace lambconv::csv
