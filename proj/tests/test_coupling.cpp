#include <doctest.h>

#include <cmath>
#include <vector>

#include "lambconv/coupling.hpp"
#include "lambconv/errors.hpp"
#include "oracles.hpp"

using namespace lambconv;
using namespace lambconv::coupling;
using doctest::Approx;

TEST_CASE("drive keeps flux derived from the field") {
  const auto d = MicrowaveDrive::from_field(2.0, 1e10);
  CHECK(d.flux() == Approx(codata().c() * 4.0 / (8.0 * kPi)).epsilon(1e-15));
  const auto f = MicrowaveDrive::from_flux(1e7, 1e10);
  CHECK(f.e0() == Approx(9.156079995e-2).epsilon(1e-9));
  CHECK(f.flux() == Approx(1e7).epsilon(1e-14));
  CHECK_THROWS_AS(MicrowaveDrive::from_field(-1.0, 1e10), DomainError);
  CHECK_THROWS_AS(MicrowaveDrive::from_field(1.0, 0.0), DomainError);
}

TEST_CASE("orientation range") {
  CHECK_NOTHROW(Orientation{0.0});
  CHECK_NOTHROW(Orientation{kPi});
  CHECK_THROWS_AS(Orientation{-0.1}, DomainError);
  CHECK_THROWS_AS(Orientation{3.2}, DomainError);
}

TEST_CASE("coupling element") {
  const auto& k = codata();
  const double d = 3.0 * k.e() * k.a0();
  CHECK(coupling_element(d, MicrowaveDrive::from_field(1.0, 1e10), Orientation(0.0)) ==
        Approx(7.230649722e9).epsilon(1e-9));
  CHECK(std::abs(coupling_element(d, MicrowaveDrive::from_field(1.0, 1e10), Orientation(kPi / 2))) < 1e-6);
  CHECK(coupling_element(d, MicrowaveDrive::from_field(0.0, 1e10), Orientation(0.3)) == 0.0);
  CHECK(coupling_element(d, MicrowaveDrive::from_field(1.0, 1e10), Orientation(kPi)) < 0.0);

  // Bilinear in d and E0.
  auto g = oracle::rng(11);
  for (int i = 0; i < 100; ++i) {
    const double dd = oracle::log_uniform(g, 1e-19, 1e-16);
    const double e0 = oracle::log_uniform(g, 1e-4, 1e2);
    const Orientation th(oracle::uniform(g, 0.0, kPi));
    const double base = coupling_element(dd, MicrowaveDrive::from_field(e0, 1e10), th);
    CHECK(coupling_element(2 * dd, MicrowaveDrive::from_field(e0, 1e10), th) == Approx(2 * base).epsilon(1e-14));
    CHECK(coupling_element(dd, MicrowaveDrive::from_field(3 * e0, 1e10), th) == Approx(3 * base).epsilon(1e-14));
  }
}

TEST_CASE("damping decrement") {
  const double w32 = 6.88e10;
  const double g31 = 3.1e8;
  CHECK(damping_decrement(w32, w32, g31) == Approx(1.0).epsilon(1e-4));
  CHECK(damping_decrement(w32, w32, g31) ==
        Approx(1.0 + g31 * g31 / (g31 * g31 + 4 * w32 * w32)).epsilon(1e-15));
  CHECK(damping_decrement(w32 + g31, w32, g31) == Approx(0.5).epsilon(1e-3));
  CHECK(damping_decrement(w32 - g31, w32, g31) == Approx(0.5).epsilon(1e-3));
  CHECK(damping_decrement(1e30, w32, g31) < 1e-30);
  CHECK_THROWS_AS(damping_decrement(w32, w32, 0.0), DomainError);
  CHECK_THROWS_AS(damping_decrement(-1.0, w32, g31), DomainError);

  CHECK(damping_decrement_resonant(w32, w32, g31) == 1.0);
  CHECK(damping_decrement(Lineshape::kFull, w32, w32, g31) == damping_decrement(w32, w32, g31));
  CHECK(damping_decrement(Lineshape::kResonant, w32 + g31, w32, g31) == Approx(0.5).epsilon(1e-15));
}

TEST_CASE("damping decrement stays in (0, 2] and peaks at resonance") {
  auto g = oracle::rng(5);
  for (int i = 0; i < 500; ++i) {
    const double w32 = oracle::log_uniform(g, 1e6, 1e12);
    const double g31 = oracle::log_uniform(g, 1e5, 1e10);
    const double w = oracle::uniform(g, 0.0, 3 * w32);
    const double lam = damping_decrement(w, w32, g31);
    CHECK(lam > 0.0);
    CHECK(lam <= 2.0);
  }

  const double g31 = 3.1e8;
  for (double w32 : {3.1e11, 6.646e9 * 100, 6.88e12}) {
    REQUIRE(w32 / g31 >= 1e3);
    const int n = 20001;
    const double lo = w32 - 20 * g31;
    const double step = 40 * g31 / (n - 1);
    int best = 0;
    double best_val = -1.0;
    for (int j = 0; j < n; ++j) {
      const double v = damping_decrement(lo + j * step, w32, g31);
      if (v > best_val) {
        best_val = v;
        best = j;
      }
    }
    CHECK(std::abs(lo + best * step - w32) <= step);
  }
}
