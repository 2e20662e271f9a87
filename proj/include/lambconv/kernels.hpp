#pragma once

#include <cstddef>
#include <exception>
#include <span>
#include <vector>

namespace lambconv::kernels {

// Every grid kernel has a serial reference path and an OpenMP path. Both
// evaluate the same pure per-point function, so their outputs are
// bit-identical; tests rely on that.
enum class Exec { kSerial, kParallel };

template <class Fn>
auto evaluate_grid(std::span<const double> xs, const Fn& fn, Exec exec)
    -> std::vector<decltype(fn(0.0))> {
  using Result = decltype(fn(0.0));
  std::vector<Result> out(xs.size());
  const auto n = static_cast<std::ptrdiff_t>(xs.size());
  if (exec == Exec::kSerial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = fn(xs[i]);
    return out;
  }

  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = fn(xs[i]);
    } catch (...) {
#pragma omp critical(lambconv_grid_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

// steps >= 2 points from lo to hi inclusive.
std::vector<double> linear_grid(double lo, double hi, int steps);
// Geometric spacing; requires 0 < lo < hi.
std::vector<double> log_grid(double lo, double hi, int steps);

struct Fig1Row {
  double beta;
  double f_exact;
  double f_small;
  double f_large;
};

// f(beta) with both asymptotic forms on a uniform grid [0, beta_max].
std::vector<Fig1Row> fig1_table(double beta_max, int steps, Exec exec = Exec::kParallel);

std::vector<double> f_beta_values(std::span<const double> betas, Exec exec = Exec::kParallel);

}  // namespace lambconv::kernels
