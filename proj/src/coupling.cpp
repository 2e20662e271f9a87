#include "lambconv/coupling.hpp"

#include <cmath>

#include "lambconv/errors.hpp"

namespace lambconv::coupling {

namespace {

void check_lorentzian_args(double omega, double gamma_31) {
  if (!(gamma_31 > 0.0)) throw DomainError("damping_decrement: gamma_31 must be positive");
  if (!(omega >= 0.0)) throw DomainError("damping_decrement: drive frequency must be non-negative");
}

double lorentzian(double detuning, double gamma) {
  const double g2 = gamma * gamma;
  return g2 / (g2 + detuning * detuning);
}

}  // namespace

MicrowaveDrive MicrowaveDrive::from_field(double e0, double omega, const PhysicalConstants& k) {
  if (!(e0 >= 0.0)) throw DomainError("field amplitude must be non-negative");
  if (!(omega > 0.0)) throw DomainError("drive frequency must be positive");
  return MicrowaveDrive(e0, omega, flux_from_field(e0, k));
}

MicrowaveDrive MicrowaveDrive::from_flux(double flux_cgs, double omega, const PhysicalConstants& k) {
  return from_field(field_from_flux(flux_cgs, k), omega, k);
}

Orientation::Orientation(double theta) : theta_(theta) {
  if (!(theta >= 0.0 && theta <= kPi)) throw DomainError("orientation angle must lie in [0, pi]");
}

double coupling_element(double d, const MicrowaveDrive& drive, Orientation orient,
                        const PhysicalConstants& k) {
  if (!(d >= 0.0)) throw DomainError("dipole magnitude must be non-negative");
  return d * drive.e0() * std::cos(orient.theta()) / k.hbar();
}

double damping_decrement(double omega, double omega_32, double gamma_31) {
  check_lorentzian_args(omega, gamma_31);
  return lorentzian(omega_32 + omega, gamma_31) + lorentzian(omega_32 - omega, gamma_31);
}

double damping_decrement_resonant(double omega, double omega_32, double gamma_31) {
  check_lorentzian_args(omega, gamma_31);
  return lorentzian(omega_32 - omega, gamma_31);
}

double damping_decrement(Lineshape shape, double omega, double omega_32, double gamma_31) {
  return shape == Lineshape::kFull ? damping_decrement(omega, omega_32, gamma_31)
                                   : damping_decrement_resonant(omega, omega_32, gamma_31);
}

}  // namespace lambconv::coupling
