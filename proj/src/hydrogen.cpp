#include "lambconv/hydrogen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "lambconv/errors.hpp"
#include "lambconv/quadrature.hpp"

namespace lambconv::hydrogen {

namespace {

// Upper limit (in a0) of the radial integrals. The slowest integrand is
// r^5 exp(-r) (2s-2p dipole); its tail beyond 80 a0 is below 1e-25.
constexpr double kRadialCutoff = 80.0;

const std::array<HydrogenMode, 4>& catalog() {
  static const std::array<HydrogenMode, 4> modes = [] {
    const double two_s = freq_mhz_to_angular(kOneSTwoSMhz);
    const double inf = std::numeric_limits<double>::infinity();
    return std::array<HydrogenMode, 4>{{
        {ModeLabel::k1s_1_2, 1, 0, 0.0, inf},
        {ModeLabel::k2s_1_2, 2, 0, two_s, 1.0 / 7.0},
        {ModeLabel::k2p_1_2, 2, 1, two_s - freq_mhz_to_angular(kLambShiftMhz), 1.6e-9},
        {ModeLabel::k2p_3_2, 2, 1, two_s + freq_mhz_to_angular(kFineStructureMhz), 1.6e-9},
    }};
  }();
  return modes;
}

void require_supported(int n, int l) {
  const bool ok = (n == 1 && l == 0) || (n == 2 && (l == 0 || l == 1));
  if (!ok) {
    throw DomainError("unsupported hydrogen state (n=" + std::to_string(n) +
                      ", l=" + std::to_string(l) + ")");
  }
}

}  // namespace

std::string_view HydrogenMode::name() const {
  switch (label) {
    case ModeLabel::k1s_1_2: return "1s1/2";
    case ModeLabel::k2s_1_2: return "2s1/2";
    case ModeLabel::k2p_1_2: return "2p1/2";
    case ModeLabel::k2p_3_2: return "2p3/2";
  }
  return "?";
}

const HydrogenMode& mode(ModeLabel label) { return catalog()[static_cast<std::size_t>(label)]; }

std::span<const HydrogenMode> mode_catalog() { return catalog(); }

const HydrogenMode& mode_by_name(std::string_view name) {
  for (const auto& m : catalog()) {
    if (m.name() == name) return m;
  }
  throw DomainError("unknown hydrogen mode '" + std::string(name) + "'");
}

double radial_wavefunction(int n, int l, double r) {
  require_supported(n, l);
  if (!(r >= 0.0)) throw DomainError("radius must be non-negative");
  if (n == 1) return 2.0 * std::exp(-r);
  if (l == 0) return (1.0 / std::sqrt(2.0)) * (1.0 - 0.5 * r) * std::exp(-0.5 * r);
  return (1.0 / std::sqrt(24.0)) * r * std::exp(-0.5 * r);
}

double radial_overlap(int n1, int l1, int n2, int l2, int power) {
  require_supported(n1, l1);
  require_supported(n2, l2);
  auto integrand = [=](double r) {
    return radial_wavefunction(n1, l1, r) * radial_wavefunction(n2, l2, r) *
           std::pow(r, 2 + power);
  };
  const auto est = quadrature::integrate(integrand, 0.0, kRadialCutoff, 1e-15, 1e-14);
  if (!est.converged) throw DomainError("radial integral did not converge");
  return est.value;
}

double radial_dipole_integral(int n1, int l1, int n2, int l2) {
  return radial_overlap(n1, l1, n2, l2, 1);
}

double dipole_matrix_element(const HydrogenMode& upper, const HydrogenMode& lower,
                             const PhysicalConstants& k) {
  if (std::abs(upper.l - lower.l) != 1) return 0.0;
  // <l+1, 0| cos(theta) |l, 0> = (l+1) / sqrt((2l+1)(2l+3)); only l = 0 occurs here.
  const int lmin = std::min(upper.l, lower.l);
  const double angular = (lmin + 1) / std::sqrt((2.0 * lmin + 1.0) * (2.0 * lmin + 3.0));
  const double radial = radial_dipole_integral(upper.n, upper.l, lower.n, lower.l);
  return k.e() * k.a0() * angular * std::abs(radial);
}

double decay_rate(double omega_nk, double d_nk, const PhysicalConstants& k) {
  if (!(omega_nk >= 0.0)) throw DomainError("decay_rate: transition frequency must be non-negative");
  const double c3 = k.c() * k.c() * k.c();
  return 2.0 * omega_nk * omega_nk * omega_nk * d_nk * d_nk / (3.0 * k.hbar() * c3);
}

double TransitionPair::lifetime() const {
  if (gamma_nk <= 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / population_decay_rate(gamma_nk);
}

TransitionPair make_transition_pair(const HydrogenMode& upper, const HydrogenMode& lower,
                                    const PhysicalConstants& k) {
  return make_transition_pair(upper, lower, upper.omega - lower.omega,
                              dipole_matrix_element(upper, lower, k), k);
}

TransitionPair make_transition_pair(const HydrogenMode& upper, const HydrogenMode& lower,
                                    double omega_nk, double d_nk, const PhysicalConstants& k) {
  if (upper == lower) throw DomainError("transition pair needs two distinct modes");
  if (!(omega_nk > 0.0)) {
    throw DomainError(std::string("mode ") + std::string(upper.name()) + " is not above " +
                      std::string(lower.name()));
  }
  if (!(d_nk >= 0.0)) throw DomainError("dipole magnitude must be non-negative");
  return {upper, lower, omega_nk, d_nk, decay_rate(omega_nk, d_nk, k)};
}

double hydrogenic_dipole_ratio(const PhysicalConstants& k) {
  const double d32 = dipole_matrix_element(mode(ModeLabel::k2p_3_2), mode(ModeLabel::k2s_1_2), k);
  const double d31 = dipole_matrix_element(mode(ModeLabel::k2p_3_2), mode(ModeLabel::k1s_1_2), k);
  return (d32 * d32) / (d31 * d31);
}

}  // namespace lambconv::hydrogen
