#include <doctest.h>

#include <cmath>

#include "lambconv/dynamics.hpp"
#include "lambconv/errors.hpp"
#include "oracles.hpp"

using namespace lambconv;
using namespace lambconv::dynamics;
using coupling::MicrowaveDrive;
using coupling::Orientation;
using doctest::Approx;

namespace {

hydrogen::TransitionPair optical_pair(double omega, double d) {
  return hydrogen::make_transition_pair(hydrogen::mode(hydrogen::ModeLabel::k2p_3_2),
                                        hydrogen::mode(hydrogen::ModeLabel::k1s_1_2), omega, d);
}

}  // namespace

TEST_CASE("excitation state bounds") {
  CHECK_NOTHROW((ExcitationState{0.5, 0.1}.validate()));
  CHECK_THROWS_AS((ExcitationState{1.5, 0.0}.validate()), DomainError);
  CHECK_THROWS_AS((ExcitationState{0.1, 0.2}.validate()), DomainError);
}

TEST_CASE("rho22 decay") {
  const double g = 3e8;
  const double b = 1e7;
  const double lam = 1.0;
  CHECK(rho22_at(0.0, b, g, lam, 0.3) == 0.3);
  CHECK(rho22_at(1.0, 0.0, g, lam, 0.3) == 0.3);
  const double e_fold = 2.0 * g / (b * b * lam);
  CHECK(rho22_at(e_fold, b, g, lam, 0.3) == Approx(0.3 / std::exp(1.0)).epsilon(1e-14));
  CHECK_THROWS_AS(rho22_at(-1.0, b, g, lam, 0.3), DomainError);
  CHECK_THROWS_AS(rho22_at(1.0, b, 0.0, lam, 0.3), DomainError);
  CHECK_THROWS_AS(rho22_at(1.0, b, g, 0.0, 0.3), DomainError);

  auto gen = oracle::rng(21);
  for (int i = 0; i < 200; ++i) {
    const double bb = oracle::log_uniform(gen, 1e5, 1e9);
    const double l = oracle::uniform(gen, 0.01, 2.0);
    const double r0 = oracle::uniform(gen, 0.0, 1.0);
    const double t1 = oracle::log_uniform(gen, 1e-12, 1e-6);
    const double t2 = oracle::log_uniform(gen, 1e-12, 1e-6);
    const double once = rho22_at(t1 + t2, bb, g, l, r0);
    const double twice = rho22_at(t2, bb, g, l, rho22_at(t1, bb, g, l, r0));
    CHECK(std::abs(once - twice) <= 1e-12 * std::max(once, 1e-300) + 1e-300);
    CHECK(rho22_at(t1 + t2, bb, g, l, r0) <= rho22_at(t1, bb, g, l, r0));
  }
}

TEST_CASE("three-mode intensity") {
  const auto pair = optical_pair(1.5e16, 1.9e-18);
  const double b = 5e8;
  CHECK(intensity_full(pair, b, 1.0, 0.2, 0.2).value == 0.0);
  const auto neg = intensity_full(pair, b, 1.0, 0.1, 0.2);
  CHECK(neg.value < 0.0);
  CHECK(neg.outside_validity);
  CHECK_FALSE(intensity_full(pair, b, 1.0, 0.2, 0.1).outside_validity);
  CHECK(intensity_full(pair, 2 * b, 1.0, 0.2, 0.0).value ==
        Approx(4 * intensity_full(pair, b, 1.0, 0.2, 0.0).value).epsilon(1e-15));

  auto zero = pair;
  zero.gamma_nk = 0.0;
  CHECK_THROWS_AS(intensity_full(zero, b, 1.0, 0.2, 0.0), DomainError);
}

TEST_CASE("flux form equals the three-mode form with rho33 = 0") {
  const auto& k = codata();
  auto g = oracle::rng(99);
  for (int i = 0; i < 1000; ++i) {
    const double omega31 = oracle::log_uniform(g, 1e14, 1e17);
    const double d31 = oracle::log_uniform(g, 1e-19, 1e-16);
    const double d32 = oracle::log_uniform(g, 1e-19, 1e-16);
    const auto drive = MicrowaveDrive::from_field(oracle::log_uniform(g, 1e-4, 1e3), 1e10);
    const Orientation th(oracle::uniform(g, 0.0, kPi));
    const double lam = oracle::uniform(g, 1e-3, 2.0);
    const double rho = oracle::uniform(g, 1e-6, 1.0);

    const auto pair = optical_pair(omega31, d31);
    const double b32 = coupling::coupling_element(d32, drive, th);
    const double full = intensity_full(pair, b32, lam, rho, 0.0).value;
    const double weak = intensity_weak(drive, th, (d32 * d32) / (d31 * d31), omega31, lam, rho, k);
    CHECK(oracle::relative_error(full, weak) <= 1e-12);
  }
}

TEST_CASE("weak intensity and cross section") {
  const double omega31 = wavelength_to_angular(122.0 * kNanometre);
  const auto drive = MicrowaveDrive::from_flux(1e7, 1e10);
  const double aligned = intensity_weak(drive, Orientation(0.0), 1.0, omega31, 1.0, 1.0);
  CHECK(std::abs(intensity_weak(drive, Orientation(kPi / 2), 1.0, omega31, 1.0, 1.0)) < 1e-30 * aligned);
  CHECK(intensity_weak(drive, Orientation(0.0), 1.0, omega31, 1.0, 0.0) == 0.0);
  CHECK_THROWS_AS(intensity_weak(drive, Orientation(0.0), 1.0, 0.0, 1.0, 1.0), DomainError);

  const double sigma = single_atom_cross_section(drive, Orientation(0.0), 1.0, omega31, 1.0, 1.0);
  CHECK(sigma == Approx(7.106586519e-11).epsilon(1e-9));
  CHECK(sigma == Approx(3.0 / (2.0 * kPi) * std::pow(1.22e-5, 2)).epsilon(1e-12));

  // Oracle: the three-mode formula divided by the flux.
  const auto& k = codata();
  const double d31 = 1.9e-18;
  const auto pair = optical_pair(omega31, d31);
  const double b32 = coupling::coupling_element(d31, drive, Orientation(0.0));
  CHECK(intensity_full(pair, b32, 1.0, 1.0, 0.0, k).value / drive.flux() == Approx(sigma).epsilon(1e-12));

  const auto strong = MicrowaveDrive::from_field(2.0 * drive.e0(), 1e10);
  CHECK(single_atom_cross_section(strong, Orientation(0.4), 1.0, omega31, 1.0, 0.5) ==
        Approx(single_atom_cross_section(drive, Orientation(0.4), 1.0, omega31, 1.0, 0.5)).epsilon(1e-14));
  CHECK(single_atom_cross_section(drive, Orientation(0.4), 2.0, omega31, 1.0, 0.5) ==
        Approx(2 * single_atom_cross_section(drive, Orientation(0.4), 1.0, omega31, 1.0, 0.5)).epsilon(1e-14));
  CHECK(single_atom_cross_section(drive, Orientation(0.4), 1.0, omega31, 1.0, 0.25) ==
        Approx(0.5 * single_atom_cross_section(drive, Orientation(0.4), 1.0, omega31, 1.0, 0.5)).epsilon(1e-14));
  CHECK(std::abs(single_atom_cross_section(drive, Orientation(kPi / 2), 1.0, omega31, 1.0, 1.0)) < 1e-30 * sigma);
  CHECK_THROWS_AS(single_atom_cross_section(MicrowaveDrive::from_field(0.0, 1e10), Orientation(0.0), 1.0,
                                            omega31, 1.0, 1.0),
                  DomainError);
}

TEST_CASE("single atom snapshot") {
  const double omega31 = wavelength_to_angular(122.0 * kNanometre);
  const auto pair = optical_pair(omega31, 1.9e-18);
  const auto drive = MicrowaveDrive::from_flux(1e7, 1e10);
  const auto r0 = single_atom_at(0.0, drive, Orientation(0.2), pair, 7.6e-18, 1.0, 0.1);
  CHECK(r0.rho22_t == 0.1);
  CHECK(r0.sigma == Approx(r0.intensity / drive.flux()));
  const auto r1 = single_atom_at(1e-7, drive, Orientation(0.2), pair, 7.6e-18, 1.0, 0.1);
  CHECK(r1.rho22_t < r0.rho22_t);
  CHECK(r1.intensity < r0.intensity);
  CHECK(r1.intensity >= 0.0);
}
