#pragma once

#include <optional>

#include "lambconv/coupling.hpp"
#include "lambconv/units.hpp"

namespace lambconv::ensemble {

// Cylindrical vessel of randomly oriented atoms.
struct EnsembleConfig {
  double length = 10.0;               // L, cm
  double area = 1.0;                  // F, cm^2
  double gas_density = 0.9e-4;        // rho_H, g/cm^3
  double rho22_0 = 1e-4;              // initial excitation of the metastable mode
  double ratio = 1.0;                 // |d32|^2 / |d31|^2
  double lambda_31 = 122.0 * kNanometre;  // optical wavelength, cm

  void validate() const;

  // N = rho_H F L / mu_H
  double atom_count(const PhysicalConstants& k = codata()) const;
  // N31 = rho_H L lambda_31^2 / mu_H
  double n31(const PhysicalConstants& k = codata()) const;
};

struct BetaPoint {
  double beta;
  double f_value;
};

// f(beta) = int_0^1 x^2 exp(-beta x^2) dx.
double f_beta(double beta);

// (1/3) exp(-beta/2); comparison only.
double f_beta_approx_small(double beta);
// (sqrt(pi)/4) beta^(-3/2); comparison only.
double f_beta_approx_large(double beta);

// 1 - int_0^1 exp(-B x^2) dx, the fraction of the stored excitation
// released once the depletion parameter has reached B.
double released_fraction(double beta);

// beta = 3 E0^2 lambda_31^3 ratio lambda t / (32 pi^3 hbar)
double beta_of(const coupling::MicrowaveDrive& drive, double ratio, double lambda_31,
               double lambda, double t, const PhysicalConstants& k = codata());

// Orientation average of rho22 cos^2(theta): rho22_0 f(beta).
double averaged_excitation(double beta, double rho22_0);

// I_sum = lambda N (3/2pi) lambda_31^2 ratio rho22_0 f(beta(t)) S_mw
double total_intensity(const EnsembleConfig& cfg, const coupling::MicrowaveDrive& drive,
                       double lambda, double t, const PhysicalConstants& k = codata());

// Energy radiated by the ensemble over [0, t]; tends to N rho22_0 hbar w31.
double emitted_energy(const EnsembleConfig& cfg, const coupling::MicrowaveDrive& drive,
                      double lambda, double t, const PhysicalConstants& k = codata());

// Peak figures with lambda_max = 1.
double sigma_max(const EnsembleConfig& cfg, double beta, const PhysicalConstants& k = codata());
double eta_max(const EnsembleConfig& cfg, double beta, const PhysicalConstants& k = codata());
inline double n31(const EnsembleConfig& cfg, const PhysicalConstants& k = codata()) {
  return cfg.n31(k);
}

// tau = 2e3 hbar / (lambda E0^2 lambda_31^3 ratio), the time for the
// ensemble emission to fall by roughly ten. nullopt means no depletion
// (zero field, ratio or lambda).
std::optional<double> depletion_time(const coupling::MicrowaveDrive& drive, double ratio,
                                     double lambda_31, double lambda,
                                     const PhysicalConstants& k = codata());

}  // namespace lambconv::ensemble
