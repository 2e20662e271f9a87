#pragma once

#include "lambconv/units.hpp"

namespace lambconv::coupling {

// Monochromatic microwave drive. The flux is always derived from the field
// amplitude, S = c E0^2 / (8 pi).
class MicrowaveDrive {
 public:
  static MicrowaveDrive from_field(double e0, double omega, const PhysicalConstants& k = codata());
  static MicrowaveDrive from_flux(double flux_cgs, double omega, const PhysicalConstants& k = codata());

  double e0() const { return e0_; }        // statV/cm
  double omega() const { return omega_; }  // rad/s
  double flux() const { return flux_; }    // erg s^-1 cm^-2

 private:
  MicrowaveDrive(double e0, double omega, double flux) : e0_(e0), omega_(omega), flux_(flux) {}

  double e0_;
  double omega_;
  double flux_;
};

// Angle between the transition dipole and the field, in [0, pi].
class Orientation {
 public:
  explicit Orientation(double theta);
  double theta() const { return theta_; }

 private:
  double theta_;
};

// b = d E0 cos(theta) / hbar. Keeps the sign of cos(theta); callers use |b|^2.
double coupling_element(double d, const MicrowaveDrive& drive, Orientation orient,
                        const PhysicalConstants& k = codata());

// lambda(omega) = g^2/(g^2 + (w32 + w)^2) + g^2/(g^2 + (w32 - w)^2), g = gamma_31.
double damping_decrement(double omega, double omega_32, double gamma_31);

// Co-rotating term only; equals 1 exactly at resonance.
double damping_decrement_resonant(double omega, double omega_32, double gamma_31);

enum class Lineshape { kResonant, kFull };

double damping_decrement(Lineshape shape, double omega, double omega_32, double gamma_31);

}  // namespace lambconv::coupling
