#include "lambconv/units.hpp"

#include <cmath>
#include <string>

#include "lambconv/errors.hpp"

namespace lambconv {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string("physical constant ") + name + " must be positive and finite");
  }
}

}  // namespace

PhysicalConstants::PhysicalConstants()
    : PhysicalConstants(1.054571817e-27, 2.99792458e10, 4.80320471e-10, 5.29177210903e-9,
                        1.6735328e-24) {}

PhysicalConstants::PhysicalConstants(double hbar, double c, double e, double a0, double mu_H)
    : hbar_(hbar), c_(c), e_(e), a0_(a0), mu_H_(mu_H) {
  require_positive(hbar_, "hbar");
  require_positive(c_, "c");
  require_positive(e_, "e");
  require_positive(a0_, "a0");
  require_positive(mu_H_, "mu_H");
}

PhysicalConstants PhysicalConstants::with_atomic_mass(double mu_H) const {
  return PhysicalConstants(hbar_, c_, e_, a0_, mu_H);
}

const PhysicalConstants& codata() {
  static const PhysicalConstants k;
  return k;
}

double freq_mhz_to_angular(double f_mhz) {
  if (!(f_mhz >= 0.0)) throw DomainError("frequency must be non-negative");
  return 2.0 * kPi * 1e6 * f_mhz;
}

double angular_to_freq_mhz(double omega) {
  if (!(omega >= 0.0)) throw DomainError("angular frequency must be non-negative");
  return omega / (2.0 * kPi * 1e6);
}

double wavelength_to_angular(double lambda_cm, const PhysicalConstants& k) {
  if (!(lambda_cm > 0.0)) throw DomainError("wavelength must be positive");
  return 2.0 * kPi * k.c() / lambda_cm;
}

double angular_to_wavelength(double omega, const PhysicalConstants& k) {
  if (!(omega > 0.0)) throw DomainError("angular frequency must be positive");
  return 2.0 * kPi * k.c() / omega;
}

double flux_si_to_cgs(double w_per_cm2) {
  if (!(w_per_cm2 >= 0.0)) throw DomainError("flux must be non-negative");
  return w_per_cm2 * kWattPerCm2;
}

double field_from_flux(double flux_cgs, const PhysicalConstants& k) {
  if (!(flux_cgs >= 0.0)) throw DomainError("flux must be non-negative");
  return std::sqrt(8.0 * kPi * flux_cgs / k.c());
}

double flux_from_field(double e0, const PhysicalConstants& k) {
  if (!(e0 >= 0.0)) throw DomainError("field amplitude must be non-negative");
  return k.c() * e0 * e0 / (8.0 * kPi);
}

}  // namespace lambconv
