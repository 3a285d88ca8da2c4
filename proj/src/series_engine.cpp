// Copyright 2026 The epiihs Authors
// SPDX-License-Identifier: Apache-2.0

#include "epiihs/series_engine.hpp"

#include <cmath>
#include <limits>

#include "epiihs/special_fn.hpp"

namespace epiihs {

std::vector<BigRational> power_sums(unsigned a, std::uint64_t n_max, unsigned r_max) {
  if (a == 0) throw InvalidArgumentError("exponent a must be >= 1");
  if (n_max == 0) throw InvalidArgumentError("N must be >= 1");
  if (r_max == 0) throw InvalidArgumentError("R must be >= 1");
  std::vector<BigRational> sums(r_max);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const BigRational base = BigRational::inverse_power(n, a);
    BigRational term = base;
    for (unsigned r = 0; r < r_max; ++r) {
      sums[r] += term;
      if (r + 1 < r_max) term *= base;
    }
  }
  return sums;
}

PowerSeries<BigRational> genfunc_coeffs_finite(unsigned a, std::uint64_t n_max,
                                               unsigned order) {
  PowerSeries<BigRational> series;
  series.step = a;
  if (order == 0) {
    if (a == 0) throw InvalidArgumentError("exponent a must be >= 1");
    if (n_max == 0) throw InvalidArgumentError("N must be >= 1");
    series.coeffs = {BigRational(1)};
    return series;
  }
  const auto p = power_sums(a, n_max, order);
  series.coeffs = homogeneous_from_power_sums<BigRational>(p, order);
  return series;
}

PowerSeries<double> genfunc_coeffs_infinite(unsigned m, unsigned order) {
  if (m < 2) throw InvalidArgumentError("m must be >= 2");
  std::vector<double> p(order);
  for (unsigned r = 1; r <= order; ++r) p[r - 1] = zeta_ref(m * r);
  PowerSeries<double> series;
  series.step = m;
  series.coeffs = homogeneous_from_power_sums<double>(p, order);
  return series;
}

double evaluate(const PowerSeries<double>& series, double t) {
  const double x = std::pow(t, static_cast<int>(series.step));
  // Horner from the top coefficient.
  double acc = 0.0;
  for (auto it = series.coeffs.rbegin(); it != series.coeffs.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

std::optional<double> geometric_tail_bound(unsigned m, double t, unsigned order) {
  if (m < 2) throw InvalidArgumentError("m must be >= 2");
  const double ratio = zeta_ref(m) * std::pow(std::fabs(t), static_cast<int>(m));
  if (ratio >= 1.0) return std::nullopt;
  return std::pow(ratio, static_cast<int>(order) + 1) / (1.0 - ratio);
}

double series_tail_bound(unsigned m, double t, unsigned order) {
  if (std::fabs(t) >= 1.0) {
    throw InvalidArgumentError("series tail bound needs |t| < 1");
  }
  if (auto g = geometric_tail_bound(m, t, order)) return *g;

  const double s = std::pow(std::fabs(t), static_cast<int>(m));
  const double zeta_m = zeta_ref(m);
  double best = std::numeric_limits<double>::infinity();
  constexpr int kGrid = 2000;
  for (int i = 1; i < kGrid; ++i) {
    const double rho = s + (1.0 - s) * i / kGrid;
    const double q = s / rho;
    const double log_bound = rho * zeta_m / (1.0 - rho) +
                             (order + 1.0) * std::log(q) - std::log1p(-q);
    best = std::min(best, std::exp(log_bound));
  }
  return best;
}

}  // namespace epiihs
