#pragma once

#include "lambconv/coupling.hpp"
#include "lambconv/hydrogen.hpp"
#include "lambconv/units.hpp"

namespace lambconv::dynamics {

// Degrees of excitation of the metastable (2) and emitting (3) modes.
struct ExcitationState {
  double rho22_0 = 0.0;
  double rho33 = 0.0;

  void validate() const;
};

struct SingleAtomResult {
  double intensity = 0.0;  // erg/s
  double sigma = 0.0;      // cm^2
  double rho22_t = 0.0;
};

// Intensity from the three-mode formula. A negative population difference
// is returned as-is with outside_validity set.
struct FlaggedIntensity {
  double value = 0.0;  // erg/s
  bool outside_validity = false;
};

// rho22(t) = rho22(0) exp(-|b32|^2 lambda t / (2 gamma_31))
double rho22_at(double t, double b32, double gamma_31, double lambda, double rho22_0);

// I = lambda hbar w31 |b32|^2 / (2 gamma_31) (rho22 - rho33)
FlaggedIntensity intensity_full(const hydrogen::TransitionPair& pair31, double b32, double lambda,
                                double rho22, double rho33, const PhysicalConstants& k = codata());

// Weak-excitation form in terms of the incident flux:
// I = lambda (6 pi c^2 / w31^2) ratio cos^2(theta) rho22 S_mw
double intensity_weak(const coupling::MicrowaveDrive& drive, coupling::Orientation orient,
                      double ratio, double omega_31, double lambda, double rho22,
                      const PhysicalConstants& k = codata());

// sigma = I / S_mw; the field amplitude cancels.
double single_atom_cross_section(const coupling::MicrowaveDrive& drive,
                                 coupling::Orientation orient, double ratio, double omega_31,
                                 double lambda, double rho22, const PhysicalConstants& k = codata());

// Evaluates one atom of fixed orientation at time t under a steady drive.
SingleAtomResult single_atom_at(double t, const coupling::MicrowaveDrive& drive,
                                coupling::Orientation orient, const hydrogen::TransitionPair& pair31,
                                double d32, double lambda, double rho22_0,
                                const PhysicalConstants& k = codata());

}  // namespace lambconv::dynamics
