#include <doctest.h>

#include <cmath>

#include "lambconv/errors.hpp"
#include "lambconv/hydrogen.hpp"
#include "oracles.hpp"

using namespace lambconv;
using namespace lambconv::hydrogen;
using doctest::Approx;

namespace {

const HydrogenMode& m1s() { return mode(ModeLabel::k1s_1_2); }
const HydrogenMode& m2s() { return mode(ModeLabel::k2s_1_2); }
const HydrogenMode& m2p1() { return mode(ModeLabel::k2p_1_2); }
const HydrogenMode& m2p3() { return mode(ModeLabel::k2p_3_2); }

double e_a0() { return codata().e() * codata().a0(); }

}  // namespace

TEST_CASE("catalog quantum numbers and splittings") {
  for (const auto& m : mode_catalog()) {
    CHECK(m.l < m.n);
    CHECK(&mode_by_name(m.name()) == &mode(m.label));
  }
  CHECK(m2p3().l == 1);
  CHECK(m2s().l == 0);
  CHECK(angular_to_freq_mhz(m2p3().omega - m2s().omega) == Approx(10949.0).epsilon(1e-9));
  CHECK(angular_to_freq_mhz(m2s().omega - m2p1().omega) == Approx(1057.77).epsilon(1e-9));
  CHECK(m2s().nominal_lifetime == Approx(1.0 / 7.0));
  CHECK_THROWS_AS(mode_by_name("3d5/2"), DomainError);
}

TEST_CASE("radial wavefunctions") {
  CHECK(radial_wavefunction(1, 0, 0.0) == 2.0);
  CHECK(radial_wavefunction(2, 1, 0.0) == 0.0);
  CHECK(radial_wavefunction(2, 0, 2.0) == 0.0);  // node
  CHECK_THROWS_AS(radial_wavefunction(3, 0, 1.0), DomainError);
  CHECK_THROWS_AS(radial_wavefunction(1, 1, 1.0), DomainError);
  CHECK_THROWS_AS(radial_wavefunction(1, 0, -1.0), DomainError);

  for (double r : {0.0, 0.3, 1.7, 5.0, 12.0}) {
    CHECK(radial_wavefunction(1, 0, r) == Approx(oracle::r10(r)).epsilon(1e-14));
    CHECK(radial_wavefunction(2, 0, r) == Approx(oracle::r20(r)).epsilon(1e-14));
    CHECK(radial_wavefunction(2, 1, r) == Approx(oracle::r21(r)).epsilon(1e-14));
  }
}

TEST_CASE("radial functions are orthonormal") {
  const int states[3][2] = {{1, 0}, {2, 0}, {2, 1}};
  for (const auto& s : states) {
    CHECK(std::abs(radial_overlap(s[0], s[1], s[0], s[1], 0) - 1.0) <= 1e-10);
    const double oracle_norm = oracle::integrate_half_line([&](double r) {
      const double v = radial_wavefunction(s[0], s[1], r);
      return v * v * r * r;
    });
    CHECK(std::abs(oracle_norm - 1.0) <= 1e-10);
  }
  CHECK(std::abs(radial_overlap(2, 0, 1, 0, 0)) <= 1e-8);
}

TEST_CASE("radial dipole integrals match closed form and an independent quadrature") {
  const double closed_12 = oracle::radial_1s2p_closed();
  const double closed_22 = oracle::radial_2s2p_closed();
  CHECK(closed_12 == Approx(128.0 * std::sqrt(6.0) / 243.0).epsilon(1e-14));
  CHECK(std::abs(closed_22) == Approx(3.0 * std::sqrt(3.0)).epsilon(1e-14));

  const double quad_12 = oracle::integrate_half_line([](double r) { return oracle::r10(r) * oracle::r21(r) * r * r * r; });
  const double quad_22 = oracle::integrate_half_line([](double r) { return oracle::r20(r) * oracle::r21(r) * r * r * r; });
  CHECK(quad_12 == Approx(closed_12).epsilon(1e-12));
  CHECK(quad_22 == Approx(closed_22).epsilon(1e-12));

  CHECK(radial_dipole_integral(2, 1, 1, 0) == Approx(quad_12).epsilon(1e-12));
  CHECK(radial_dipole_integral(2, 1, 2, 0) == Approx(quad_22).epsilon(1e-12));
  CHECK(radial_dipole_integral(2, 1, 1, 0) == Approx(1.29027).epsilon(1e-5));
}

TEST_CASE("dipole matrix elements") {
  CHECK(dipole_matrix_element(m2s(), m2s()) == 0.0);
  CHECK(dipole_matrix_element(m2s(), m1s()) == 0.0);
  CHECK(dipole_matrix_element(m2p3(), m1s()) / e_a0() == Approx(0.74494).epsilon(1e-5));
  CHECK(dipole_matrix_element(m2p3(), m2s()) / e_a0() == Approx(3.0).epsilon(1e-12));
  CHECK(dipole_matrix_element(m2p1(), m2s()) / e_a0() == Approx(3.0).epsilon(1e-12));
  for (const auto& a : mode_catalog()) {
    for (const auto& b : mode_catalog()) {
      CHECK(dipole_matrix_element(a, b) == dipole_matrix_element(b, a));
    }
  }
  CHECK(hydrogenic_dipole_ratio() == Approx(16.2183).epsilon(1e-4));
}

TEST_CASE("decay rate") {
  CHECK(decay_rate(1e16, 0.0) == 0.0);
  CHECK(decay_rate(0.0, 1e-18) == 0.0);
  CHECK(decay_rate(2e15, 1e-18) == Approx(8.0 * decay_rate(1e15, 1e-18)).epsilon(1e-14));
  CHECK_THROWS_AS(decay_rate(-1.0, 1e-18), DomainError);

  // Monotone in both arguments.
  auto g = oracle::rng(3);
  for (int i = 0; i < 100; ++i) {
    const double w = oracle::log_uniform(g, 1e8, 1e17);
    const double d = oracle::log_uniform(g, 1e-20, 1e-16);
    CHECK(decay_rate(w * 1.01, d) > decay_rate(w, d));
    CHECK(decay_rate(w, d * 1.01) > decay_rate(w, d));
  }
}

TEST_CASE("2p -> 1s lifetime at the nominal 122 nm line") {
  const double omega = wavelength_to_angular(122.0 * kNanometre);
  const auto pair = make_transition_pair(m2p3(), m1s(), omega, dipole_matrix_element(m2p3(), m1s()));
  const double rate = population_decay_rate(pair.gamma_nk);
  CHECK(rate >= 5.9e8);
  CHECK(rate <= 6.6e8);
  CHECK(pair.lifetime() == Approx(1.6e-9).epsilon(0.05));
  CHECK(pair.lifetime() == Approx(1.0 / rate).epsilon(1e-15));
}

TEST_CASE("transition pairs") {
  const auto optical = make_transition_pair(m2p3(), m1s());
  CHECK(optical.omega_nk == Approx(1.544e16).epsilon(0.01));
  CHECK(angular_to_wavelength(optical.omega_nk) / kNanometre == Approx(122.0).epsilon(0.01));
  CHECK(optical.gamma_nk > 0.0);

  const auto fine = make_transition_pair(m2p3(), m2s());
  CHECK(fine.omega_nk == Approx(2.0 * kPi * 1.0949e10).epsilon(1e-9));
  const auto lamb = make_transition_pair(m2s(), m2p1());
  CHECK(lamb.omega_nk == Approx(2.0 * kPi * 1.05777e9).epsilon(1e-9));

  // gamma vanishes exactly when the dipole does.
  const auto forbidden = make_transition_pair(m2s(), m1s());
  CHECK(forbidden.d_nk == 0.0);
  CHECK(forbidden.gamma_nk == 0.0);
  CHECK(std::isinf(forbidden.lifetime()));

  CHECK_THROWS_AS(make_transition_pair(m2s(), m2s()), DomainError);
  CHECK_THROWS_AS(make_transition_pair(m1s(), m2p3()), DomainError);
}
