#include "lambconv/ensemble.hpp"

#include <cmath>

#include "lambconv/errors.hpp"

namespace lambconv::ensemble {

namespace {

constexpr double kSeriesSwitch = 0.1;
const double kSqrtPi = std::sqrt(kPi);

void require_beta(double beta) {
  if (!(beta >= 0.0)) throw DomainError("beta must be non-negative");
}

}  // namespace

void EnsembleConfig::validate() const {
  if (!(length > 0.0)) throw DomainError("vessel length must be positive");
  if (!(area > 0.0)) throw DomainError("vessel cross-section must be positive");
  if (!(gas_density > 0.0)) throw DomainError("gas density must be positive");
  if (!(lambda_31 > 0.0)) throw DomainError("optical wavelength must be positive");
  if (!(rho22_0 >= 0.0 && rho22_0 <= 1.0)) throw DomainError("rho22_0 must lie in [0, 1]");
  if (!(ratio >= 0.0)) throw DomainError("dipole ratio must be non-negative");
}

double EnsembleConfig::atom_count(const PhysicalConstants& k) const {
  return gas_density * area * length / k.mu_H();
}

double EnsembleConfig::n31(const PhysicalConstants& k) const {
  return gas_density * length * lambda_31 * lambda_31 / k.mu_H();
}

double f_beta(double beta) {
  require_beta(beta);
  if (beta < kSeriesSwitch) {
    // sum_k (-beta)^k / (k! (2k + 3)); the closed form cancels badly here.
    double term = 1.0;  // (-beta)^k / k!
    double sum = 0.0;
    for (int k = 0; k < 40; ++k) {
      const double contrib = term / (2.0 * k + 3.0);
      sum += contrib;
      if (std::abs(contrib) < 1e-18) break;
      term *= -beta / (k + 1.0);
    }
    return sum;
  }
  const double root = std::sqrt(beta);
  return kSqrtPi * std::erf(root) / (4.0 * beta * root) - std::exp(-beta) / (2.0 * beta);
}

double f_beta_approx_small(double beta) {
  return std::exp(-0.5 * beta) / 3.0;
}

double f_beta_approx_large(double beta) {
  return 0.25 * kSqrtPi * std::pow(beta, -1.5);
}

double released_fraction(double beta) {
  require_beta(beta);
  if (beta < kSeriesSwitch) {
    // sum_{k>=1} (-1)^(k+1) beta^k / (k! (2k + 1))
    double term = beta;  // beta^k / k!
    double sum = 0.0;
    for (int k = 1; k < 40; ++k) {
      const double contrib = (k % 2 == 1 ? term : -term) / (2.0 * k + 1.0);
      sum += contrib;
      if (std::abs(contrib) < 1e-18) break;
      term *= beta / (k + 1.0);
    }
    return sum;
  }
  const double root = std::sqrt(beta);
  return 1.0 - kSqrtPi * std::erf(root) / (2.0 * root);
}

double beta_of(const coupling::MicrowaveDrive& drive, double ratio, double lambda_31,
               double lambda, double t, const PhysicalConstants& k) {
  if (!(ratio >= 0.0 && lambda_31 >= 0.0 && lambda >= 0.0 && t >= 0.0)) {
    throw DomainError("beta_of: inputs must be non-negative");
  }
  const double l3 = lambda_31 * lambda_31 * lambda_31;
  return 3.0 * drive.e0() * drive.e0() * l3 * ratio * lambda * t /
         (32.0 * kPi * kPi * kPi * k.hbar());
}

double averaged_excitation(double beta, double rho22_0) {
  return rho22_0 * f_beta(beta);
}

double total_intensity(const EnsembleConfig& cfg, const coupling::MicrowaveDrive& drive,
                       double lambda, double t, const PhysicalConstants& k) {
  cfg.validate();
  const double beta = beta_of(drive, cfg.ratio, cfg.lambda_31, lambda, t, k);
  return lambda * cfg.atom_count(k) * (3.0 / (2.0 * kPi)) * cfg.lambda_31 * cfg.lambda_31 *
         cfg.ratio * averaged_excitation(beta, cfg.rho22_0) * drive.flux();
}

double emitted_energy(const EnsembleConfig& cfg, const coupling::MicrowaveDrive& drive,
                      double lambda, double t, const PhysicalConstants& k) {
  cfg.validate();
  const double beta = beta_of(drive, cfg.ratio, cfg.lambda_31, lambda, t, k);
  const double photon = k.hbar() * wavelength_to_angular(cfg.lambda_31, k);
  return cfg.atom_count(k) * cfg.rho22_0 * photon * released_fraction(beta);
}

double sigma_max(const EnsembleConfig& cfg, double beta, const PhysicalConstants& k) {
  cfg.validate();
  return cfg.atom_count(k) * (3.0 / (2.0 * kPi)) * cfg.lambda_31 * cfg.lambda_31 * cfg.ratio *
         cfg.rho22_0 * f_beta(beta);
}

double eta_max(const EnsembleConfig& cfg, double beta, const PhysicalConstants& k) {
  return sigma_max(cfg, beta, k) / cfg.area;
}

std::optional<double> depletion_time(const coupling::MicrowaveDrive& drive, double ratio,
                                     double lambda_31, double lambda, const PhysicalConstants& k) {
  if (!(ratio >= 0.0 && lambda >= 0.0)) throw DomainError("depletion_time: negative input");
  if (!(lambda_31 > 0.0)) throw DomainError("depletion_time: wavelength must be positive");
  if (drive.e0() == 0.0 || ratio == 0.0 || lambda == 0.0) return std::nullopt;
  const double l3 = lambda_31 * lambda_31 * lambda_31;
  return 2e3 * k.hbar() / (lambda * drive.e0() * drive.e0() * l3) / ratio;
}

}  // namespace lambconv::ensemble
