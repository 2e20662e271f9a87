#include "lambconv/dynamics.hpp"

#include <cmath>

#include "lambconv/errors.hpp"

namespace lambconv::dynamics {

void ExcitationState::validate() const {
  if (!(rho22_0 >= 0.0 && rho22_0 <= 1.0)) throw DomainError("rho22_0 must lie in [0, 1]");
  if (!(rho33 >= 0.0 && rho33 <= rho22_0)) throw DomainError("rho33 must lie in [0, rho22_0]");
}

double rho22_at(double t, double b32, double gamma_31, double lambda, double rho22_0) {
  if (!(t >= 0.0)) throw DomainError("rho22_at: time must be non-negative");
  if (!(gamma_31 > 0.0)) throw DomainError("rho22_at: gamma_31 must be positive");
  if (!(lambda > 0.0 && lambda <= 2.0)) throw DomainError("rho22_at: lambda must lie in (0, 2]");
  if (!(rho22_0 >= 0.0 && rho22_0 <= 1.0)) throw DomainError("rho22_at: rho22_0 must lie in [0, 1]");
  return rho22_0 * std::exp(-(b32 * b32) * lambda * t / (2.0 * gamma_31));
}

FlaggedIntensity intensity_full(const hydrogen::TransitionPair& pair31, double b32, double lambda,
                                double rho22, double rho33, const PhysicalConstants& k) {
  if (!(pair31.gamma_nk > 0.0)) throw DomainError("intensity_full: gamma_31 must be positive");
  const double population = rho22 - rho33;
  const double value =
      lambda * k.hbar() * pair31.omega_nk * (b32 * b32) / (2.0 * pair31.gamma_nk) * population;
  return {value, population < 0.0};
}

double intensity_weak(const coupling::MicrowaveDrive& drive, coupling::Orientation orient,
                      double ratio, double omega_31, double lambda, double rho22,
                      const PhysicalConstants& k) {
  if (!(omega_31 > 0.0)) throw DomainError("intensity_weak: omega_31 must be positive");
  if (!(ratio >= 0.0)) throw DomainError("intensity_weak: dipole ratio must be non-negative");
  const double cos_t = std::cos(orient.theta());
  return lambda * (6.0 * kPi * k.c() * k.c() / (omega_31 * omega_31)) * ratio * cos_t * cos_t *
         rho22 * drive.flux();
}

double single_atom_cross_section(const coupling::MicrowaveDrive& drive,
                                 coupling::Orientation orient, double ratio, double omega_31,
                                 double lambda, double rho22, const PhysicalConstants& k) {
  if (!(drive.flux() > 0.0)) throw DomainError("cross section undefined at zero flux");
  return intensity_weak(drive, orient, ratio, omega_31, lambda, rho22, k) / drive.flux();
}

SingleAtomResult single_atom_at(double t, const coupling::MicrowaveDrive& drive,
                                coupling::Orientation orient, const hydrogen::TransitionPair& pair31,
                                double d32, double lambda, double rho22_0,
                                const PhysicalConstants& k) {
  const double b32 = coupling::coupling_element(d32, drive, orient, k);
  SingleAtomResult out;
  out.rho22_t = rho22_at(t, b32, pair31.gamma_nk, lambda, rho22_0);
  out.intensity = intensity_full(pair31, b32, lambda, out.rho22_t, 0.0, k).value;
  out.sigma = drive.flux() > 0.0 ? out.intensity / drive.flux() : 0.0;
  return out;
}

}  // namespace lambconv::dynamics
