// Copyright 2026 The epiihs Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "epiihs/big_rational.hpp"
#include "epiihs/error.hpp"

namespace epiihs {

inline constexpr unsigned kDefaultSeriesOrder = 32;

/// Truncated series sum_k coeffs[k] * t^(step*k), k = 0..order().
template <typename T>
struct PowerSeries {
  std::vector<T> coeffs;
  unsigned step = 1;

  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

/// p_r = sum_{n=1}^{N} n^(-a*r) for r = 1..R, exact. Entry r-1 holds p_r.
std::vector<BigRational> power_sums(unsigned a, std::uint64_t n_max, unsigned r_max);

namespace detail {
inline BigRational divide_by_index(const BigRational& x, unsigned k) {
  return x / BigRational(k);
}
inline double divide_by_index(double x, unsigned k) { return x / k; }
}  // namespace detail

/// Complete homogeneous symmetric functions h_0..h_K from power sums p_1..p_K
/// via k h_k = sum_{r=1}^{k} p_r h_{k-r}. `p[r-1]` holds p_r.
template <typename T>
std::vector<T> homogeneous_from_power_sums(std::span<const T> p, unsigned order) {
  if (p.size() < order) {
    throw InvalidArgumentError("homogeneous_from_power_sums: need at least K power sums");
  }
  std::vector<T> h(order + 1);
  h[0] = T(1);
  for (unsigned k = 1; k <= order; ++k) {
    T acc = T(0);
    for (unsigned r = 1; r <= k; ++r) acc += p[r - 1] * h[k - r];
    h[k] = detail::divide_by_index(acc, k);
  }
  return h;
}

/// Exact Taylor coefficients in t^a of prod_{n=1}^{N} n^a/(n^a - t^a); entry k
/// equals S_{a_k}(N).
PowerSeries<BigRational> genfunc_coeffs_finite(unsigned a, std::uint64_t n_max,
                                               unsigned order);

/// Coefficients S_{m_k}(inf), k = 0..K, from power sums p_r = zeta(m r).
PowerSeries<double> genfunc_coeffs_infinite(unsigned m, unsigned order);

/// Evaluates sum_k coeffs[k] * t^(step*k).
double evaluate(const PowerSeries<double>& series, double t);

/// Rigorous bound on |sum_{k>K} S_{m_k}(inf) t^(m k)| for |t| < 1.
///
/// With s = |t|^m: the geometric bound (zeta(m) s)^(K+1) / (1 - zeta(m) s)
/// when zeta(m) s < 1; otherwise the Cauchy estimate
/// h_k <= exp(rho zeta(m) / (1 - rho)) / rho^k minimised over rho in (s, 1).
double series_tail_bound(unsigned m, double t, unsigned order);

/// Geometric bound only; empty when zeta(m) |t|^m >= 1.
std::optional<double> geometric_tail_bound(unsigned m, double t, unsigned order);

}  // namespace epiihs
