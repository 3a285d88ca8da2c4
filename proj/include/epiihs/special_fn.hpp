// Copyright 2026 The epiihs Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace epiihs {

using ComplexValue = std::complex<double>;

/// Distance from a non-positive integer below which gamma reports a pole.
inline constexpr double kPoleThreshold = 1e-12;

/// The m-th roots of unity xi_m^j = exp(2 pi i j / m), j = 0..m-1.
/// values[m-j] is the exact conjugate of values[j]; points on the axes are
/// exact.
struct RootsOfUnity {
  unsigned m = 0;
  std::vector<ComplexValue> values;
};

RootsOfUnity roots_of_unity(unsigned m);

/// sin(pi x) and cos(pi x) with exact reduction modulo 2.
double sin_pi(double x);
double cos_pi(double x);
ComplexValue sin_pi(ComplexValue z);

/// Complex gamma function (Lanczos, g = 7, nine terms; reflection for
/// Re z < 1/2). Throws PoleError within kPoleThreshold of 0, -1, -2, ...
ComplexValue gamma_complex(ComplexValue z);

/// log Gamma(z) modulo 2 pi i; only meant to be exponentiated.
ComplexValue log_gamma_complex(ComplexValue z);

/// prod_{j=0}^{m-1} Gamma(1 - xi_m^j t), the closed form of the infinite
/// generating function. Requires |t| < 1.
ComplexValue gamma_product(unsigned m, double t);

/// prod_{n=1}^{N} n^a / (n^a - t^a), factors multiplied in increasing n.
/// Non-integer a needs t >= 0.
double finite_product(double a, std::uint64_t n_max, double t);

/// B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y).
ComplexValue beta(ComplexValue x, ComplexValue y);

/// N^z B(N, z), which tends to Gamma(z) as N grows. Requires Re z > 0.
ComplexValue beta_limit(ComplexValue z, std::uint64_t n);

/// Gamma(alpha_1) ... Gamma(alpha_m) / Gamma(alpha_1 + ... + alpha_m).
double multibeta(std::span<const double> alphas);

/// Riemann zeta at an integer s >= 2: direct sum to n = 100 plus an
/// Euler-Maclaurin tail through the B_4 term.
double zeta_ref(unsigned s);

}  // namespace epiihs
