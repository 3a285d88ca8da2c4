// Copyright 2026 The epiihs Authors
// SPDX-License-Identifier: Apache-2.0

#include "epiihs/special_fn.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "epiihs/error.hpp"

namespace epiihs {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos coefficients for g = 7, n = 9 (Godfrey's set).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

std::string describe(ComplexValue z) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << z.real() << ", " << z.imag() << ")";
  return os.str();
}

void check_finite(ComplexValue z, const char* where) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(where) + ": non-finite argument");
  }
}

void check_pole(ComplexValue z) {
  if (z.real() > 0.5) return;
  const double nearest = std::round(z.real());
  if (nearest <= 0.0 && std::abs(z - ComplexValue(nearest, 0.0)) <= kPoleThreshold) {
    throw PoleError("gamma: pole at " + describe(z));
  }
}

// Lanczos series for Re z >= 1/2: returns (sum, t) with z already shifted by -1.
std::pair<ComplexValue, ComplexValue> lanczos_terms(ComplexValue z) {
  z -= 1.0;
  ComplexValue sum = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    sum += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  }
  const ComplexValue t = z + kLanczosG + 0.5;
  return {sum, t};
}

void check_non_zero(ComplexValue v, ComplexValue z, const char* where) {
  if (v == ComplexValue(0.0, 0.0)) {
    throw PoleError(std::string(where) + ": pole at " + describe(z));
  }
}

}  // namespace

double sin_pi(double x) {
  double r = std::fmod(x, 2.0);
  if (r < 0.0) r += 2.0;
  const double n = std::round(2.0 * r);
  const double f = r - 0.5 * n;
  switch (static_cast<int>(n) % 4) {
    case 0: return std::sin(kPi * f);
    case 1: return std::cos(kPi * f);
    case 2: return -std::sin(kPi * f);
    default: return -std::cos(kPi * f);
  }
}

double cos_pi(double x) {
  double r = std::fmod(std::fabs(x), 2.0);
  const double n = std::round(2.0 * r);
  const double f = r - 0.5 * n;
  switch (static_cast<int>(n) % 4) {
    case 0: return std::cos(kPi * f);
    case 1: return -std::sin(kPi * f);
    case 2: return -std::cos(kPi * f);
    default: return std::sin(kPi * f);
  }
}

ComplexValue sin_pi(ComplexValue z) {
  const double y = kPi * z.imag();
  return {sin_pi(z.real()) * std::cosh(y), cos_pi(z.real()) * std::sinh(y)};
}

RootsOfUnity roots_of_unity(unsigned m) {
  if (m < 2) throw InvalidArgumentError("roots_of_unity: m must be >= 2");
  RootsOfUnity roots{m, std::vector<ComplexValue>(m)};
  for (unsigned j = 0; 2 * j <= m; ++j) {
    const double turn = 2.0 * j / m;
    roots.values[j] = {cos_pi(turn), sin_pi(turn)};
    if (j != 0) roots.values[m - j] = std::conj(roots.values[j]);
  }
  return roots;
}

ComplexValue gamma_complex(ComplexValue z) {
  check_finite(z, "gamma");
  check_pole(z);
  if (z.imag() == 0.0 && z.real() >= 1.0 && z.real() <= 171.0 &&
      z.real() == std::floor(z.real())) {
    // Positive integers: (n-1)! by direct multiplication.
    double factorial = 1.0;
    for (double i = 2.0; i < z.real(); i += 1.0) factorial *= i;
    return factorial;
  }
  if (z.real() < 0.5) {
    const ComplexValue s = sin_pi(z);
    check_non_zero(s, z, "gamma");
    return kPi / (s * gamma_complex(1.0 - z));
  }
  const auto [sum, t] = lanczos_terms(z);
  const ComplexValue shifted = z - 0.5;
  return std::sqrt(2.0 * kPi) * std::exp(shifted * std::log(t) - t) * sum;
}

ComplexValue log_gamma_complex(ComplexValue z) {
  check_finite(z, "log_gamma");
  check_pole(z);
  if (z.real() < 0.5) {
    const ComplexValue s = sin_pi(z);
    check_non_zero(s, z, "log_gamma");
    return std::log(kPi) - std::log(s) - log_gamma_complex(1.0 - z);
  }
  const auto [sum, t] = lanczos_terms(z);
  return 0.5 * std::log(2.0 * kPi) + (z - 0.5) * std::log(t) - t + std::log(sum);
}

ComplexValue gamma_product(unsigned m, double t) {
  if (!(std::fabs(t) < 1.0)) {
    throw InvalidArgumentError("gamma_product: requires |t| < 1");
  }
  const RootsOfUnity roots = roots_of_unity(m);
  ComplexValue product = 1.0;
  for (const ComplexValue& xi : roots.values) product *= gamma_complex(1.0 - xi * t);
  return product;
}

double finite_product(double a, std::uint64_t n_max, double t) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw InvalidArgumentError("finite_product: exponent a must be positive");
  }
  if (n_max == 0) throw InvalidArgumentError("finite_product: N must be >= 1");
  if (!(std::fabs(t) < 1.0)) {
    throw InvalidArgumentError("finite_product: requires |t| < 1");
  }
  const bool integral = a == std::floor(a);
  if (!integral && t < 0.0) {
    throw DomainError("finite_product: t^a undefined for t < 0 and non-integer a");
  }
  const double t_pow = integral ? std::pow(t, static_cast<int>(a)) : std::pow(t, a);
  double product = 1.0;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const double n_pow = std::pow(static_cast<double>(n), a);
    const double denom = n_pow - t_pow;
    if (denom == 0.0) throw DivisionByZeroError("finite_product: t^a = n^a");
    product *= n_pow / denom;
  }
  return product;
}

ComplexValue beta(ComplexValue x, ComplexValue y) {
  const ComplexValue s = x + y;
  check_pole(x);
  check_pole(y);
  check_pole(s);
  // Gamma overflows near 171; switch to the log route well before that.
  constexpr double kDirectLimit = 100.0;
  if (std::abs(x) < kDirectLimit && std::abs(y) < kDirectLimit &&
      std::abs(s) < kDirectLimit) {
    return gamma_complex(x) * gamma_complex(y) / gamma_complex(s);
  }
  return std::exp(log_gamma_complex(x) + log_gamma_complex(y) - log_gamma_complex(s));
}

ComplexValue beta_limit(ComplexValue z, std::uint64_t n) {
  if (n == 0) throw InvalidArgumentError("beta_limit: N must be >= 1");
  if (!(z.real() > 0.0)) throw DomainError("beta_limit: requires Re z > 0");
  const double big_n = static_cast<double>(n);
  const ComplexValue x(big_n, 0.0);
  return std::exp(z * std::log(big_n) + log_gamma_complex(x) + log_gamma_complex(z) -
                  log_gamma_complex(x + z));
}

double multibeta(std::span<const double> alphas) {
  if (alphas.empty()) throw InvalidArgumentError("multibeta: no parameters");
  double numerator = 1.0;
  double total = 0.0;
  for (double alpha : alphas) {
    numerator *= gamma_complex(ComplexValue(alpha, 0.0)).real();
    total += alpha;
  }
  return numerator / gamma_complex(ComplexValue(total, 0.0)).real();
}

double zeta_ref(unsigned s) {
  if (s < 2) throw InvalidArgumentError("zeta_ref: s must be >= 2");
  constexpr int kCut = 100;
  const double ds = s;
  // Neumaier summation, smallest terms first.
  double sum = 0.0;
  double carry = 0.0;
  auto add = [&](double term) {
    const double next = sum + term;
    carry += std::fabs(sum) >= std::fabs(term) ? (sum - next) + term
                                                 : (term - next) + sum;
    sum = next;
  };
  // sum_{n>=N} n^-s ~ N^(1-s)/(s-1) + N^-s/2 + s N^(-s-1)/12
  //                   - s(s+1)(s+2) N^(-s-3)/720
  const double big_n = kCut;
  const double n_pow = std::pow(big_n, -ds);
  add(-ds * (ds + 1.0) * (ds + 2.0) * n_pow / (big_n * big_n * big_n) / 720.0);
  add(ds * n_pow / big_n / 12.0);
  add(0.5 * n_pow);
  add(big_n * n_pow / (ds - 1.0));
  for (int n = kCut - 1; n >= 1; --n) add(std::pow(static_cast<double>(n), -ds));
  return sum + carry;
}

}  // namespace epiihs
