#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace lambconv::quadrature {

struct Estimate {
  double value = 0.0;
  double error = 0.0;
  std::size_t intervals = 0;
  bool converged = false;
};

namespace detail {

// 15-point Kronrod abscissae with the embedded 7-point Gauss rule.
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

template <class Fn>
Panel gauss_kronrod_15(const Fn& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double pair = f(centre - dx) + f(centre + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod (7/15) on a finite interval: the panel
// with the largest error estimate is bisected until the summed estimate
// meets max(abs_tol, rel_tol * |I|).
template <class Fn>
Estimate integrate(const Fn& f, double a, double b, double abs_tol = 1e-14,
                   double rel_tol = 1e-13, std::size_t max_intervals = 2000) {
  std::vector<detail::Panel> panels{detail::gauss_kronrod_15(f, a, b)};
  auto by_error = [](const detail::Panel& x, const detail::Panel& y) { return x.error < y.error; };

  Estimate est;
  for (;;) {
    double value = 0.0;
    double error = 0.0;
    for (const auto& p : panels) {
      value += p.value;
      error += p.error;
    }
    est.value = value;
    est.error = error;
    est.intervals = panels.size();
    if (error <= std::max(abs_tol, rel_tol * std::abs(value))) {
      est.converged = true;
      return est;
    }
    if (panels.size() >= max_intervals) return est;

    std::pop_heap(panels.begin(), panels.end(), by_error);
    const detail::Panel worst = panels.back();
    panels.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    panels.push_back(detail::gauss_kronrod_15(f, worst.a, mid));
    std::push_heap(panels.begin(), panels.end(), by_error);
    panels.push_back(detail::gauss_kronrod_15(f, mid, worst.b));
    std::push_heap(panels.begin(), panels.end(), by_error);
  }
}

}  // namespace lambconv::quadrature
