#pragma once

// Gaussian-CGS constants and the handful of boundary conversions the
// pipeline needs. Everything downstream works in CGS.

namespace lambconv {

class PhysicalConstants {
 public:
  // CODATA 2018 values, converted to Gaussian units.
  PhysicalConstants();
  PhysicalConstants(double hbar, double c, double e, double a0, double mu_H);

  double hbar() const { return hbar_; }  // erg s
  double c() const { return c_; }        // cm / s
  double e() const { return e_; }        // statC
  double a0() const { return a0_; }      // cm
  double mu_H() const { return mu_H_; }  // g

  // e^2 / (hbar c)
  double fine_structure() const { return e_ * e_ / (hbar_ * c_); }

  PhysicalConstants with_atomic_mass(double mu_H) const;

 private:
  double hbar_;
  double c_;
  double e_;
  double a0_;
  double mu_H_;
};

const PhysicalConstants& codata();

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kNanometre = 1e-7;      // cm
inline constexpr double kWattPerCm2 = 1e7;      // erg s^-1 cm^-2

double freq_mhz_to_angular(double f_mhz);
double angular_to_freq_mhz(double omega);

// lambda = 2 pi c / omega
double wavelength_to_angular(double lambda_cm, const PhysicalConstants& k = codata());
double angular_to_wavelength(double omega, const PhysicalConstants& k = codata());

double flux_si_to_cgs(double w_per_cm2);

// S = c E0^2 / (8 pi) and its inverse.
double field_from_flux(double flux_cgs, const PhysicalConstants& k = codata());
double flux_from_field(double e0, const PhysicalConstants& k = codata());

}  // namespace lambconv
