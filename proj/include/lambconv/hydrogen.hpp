#pragma once

#include <span>
#include <string_view>

#include "lambconv/units.hpp"

namespace lambconv::hydrogen {

enum class ModeLabel { k1s_1_2, k2s_1_2, k2p_1_2, k2p_3_2 };

// An eigenmode of the hydrogen atom. omega is measured from the 1s_1/2
// level; the n = 2 splittings are catalog data, not computed here.
struct HydrogenMode {
  ModeLabel label;
  int n;
  int l;
  double omega;             // rad/s
  double nominal_lifetime;  // s, informational; +inf for the ground state

  std::string_view name() const;
  friend bool operator==(const HydrogenMode& a, const HydrogenMode& b) { return a.label == b.label; }
};

inline constexpr double kFineStructureMhz = 10949.0;  // 2s1/2 -> 2p3/2
inline constexpr double kLambShiftMhz = 1057.77;      // 2p1/2 -> 2s1/2
inline constexpr double kOneSTwoSMhz = 2466061413.187;  // 1s1/2 -> 2s1/2

const HydrogenMode& mode(ModeLabel label);
std::span<const HydrogenMode> mode_catalog();
const HydrogenMode& mode_by_name(std::string_view name);

// Normalized radial function R_nl(r), r in Bohr radii, result in a0^(-3/2).
// Supported: (1,0), (2,0), (2,1).
double radial_wavefunction(int n, int l, double r);

// Integral of R_n1l1 * R_n2l2 * r^(2 + power) over [0, inf), in a0^power.
double radial_overlap(int n1, int l1, int n2, int l2, int power);

// <n1 l1 | r | n2 l2> radial dipole integral in units of a0.
double radial_dipole_integral(int n1, int l1, int n2, int l2);

// |<upper, m=0| e z |lower, m=0>| in statC cm; zero unless |dl| = 1.
double dipole_matrix_element(const HydrogenMode& upper, const HydrogenMode& lower,
                             const PhysicalConstants& k = codata());

// gamma = 2 omega^3 |d|^2 / (3 hbar c^3). This is the amplitude damping
// rate (the half-width of the emission Lorentzian); populations decay at
// twice this rate.
double decay_rate(double omega_nk, double d_nk, const PhysicalConstants& k = codata());

inline double population_decay_rate(double gamma_nk) { return 2.0 * gamma_nk; }

struct TransitionPair {
  HydrogenMode upper;
  HydrogenMode lower;
  double omega_nk;  // rad/s
  double d_nk;      // statC cm
  double gamma_nk;  // 1/s

  // 1 / (2 gamma): radiative lifetime of the upper mode through this channel.
  double lifetime() const;
};

TransitionPair make_transition_pair(const HydrogenMode& upper, const HydrogenMode& lower,
                                    const PhysicalConstants& k = codata());

// Same, with the transition frequency and dipole supplied by the caller
// (e.g. the nominal 122 nm optical line shared by both channels).
TransitionPair make_transition_pair(const HydrogenMode& upper, const HydrogenMode& lower,
                                    double omega_nk, double d_nk,
                                    const PhysicalConstants& k = codata());

// |d_32|^2 / |d_31|^2 for the hydrogenic m = 0 elements: (3 / 0.74494)^2.
double hydrogenic_dipole_ratio(const PhysicalConstants& k = codata());

}  // namespace lambconv::hydrogen
