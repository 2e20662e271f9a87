#include "lambconv/kernels.hpp"

#include <cmath>

#include "lambconv/ensemble.hpp"
#include "lambconv/errors.hpp"

namespace lambconv::kernels {

std::vector<double> linear_grid(double lo, double hi, int steps) {
  if (steps < 2) throw DomainError("grid needs at least 2 points");
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("grid bounds must satisfy min < max");
  }
  std::vector<double> xs(static_cast<std::size_t>(steps));
  const double span = hi - lo;
  for (int i = 0; i < steps; ++i) xs[i] = lo + span * i / (steps - 1);
  xs.back() = hi;
  return xs;
}

std::vector<double> log_grid(double lo, double hi, int steps) {
  if (!(lo > 0.0)) throw DomainError("logarithmic grid needs a positive lower bound");
  auto xs = linear_grid(std::log(lo), std::log(hi), steps);
  for (auto& x : xs) x = std::exp(x);
  xs.front() = lo;
  xs.back() = hi;
  return xs;
}

std::vector<Fig1Row> fig1_table(double beta_max, int steps, Exec exec) {
  if (!(beta_max > 0.0)) throw DomainError("beta_max must be positive");
  const auto betas = linear_grid(0.0, beta_max, steps);
  return evaluate_grid(
      betas,
      [](double b) {
        return Fig1Row{b, ensemble::f_beta(b), ensemble::f_beta_approx_small(b),
                       ensemble::f_beta_approx_large(b)};
      },
      exec);
}

std::vector<double> f_beta_values(std::span<const double> betas, Exec exec) {
  return evaluate_grid(betas, [](double b) { return ensemble::f_beta(b); }, exec);
}

}  // namespace lambconv::kernels
