// Copyright 2026 The epiihs Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "epiihs/philox.hpp"
#include "epiihs/special_fn.hpp"

namespace epiihs {

/// Coordinates below this are rejected by the simplex sampler.
inline constexpr double kMinCoordinate = 1e-300;
/// Samples per deterministic Monte Carlo chunk.
inline constexpr std::uint64_t kChunkSize = std::uint64_t{1} << 16;

/// A point of the open simplex: m >= 2 positive coordinates summing to 1.
class SimplexPoint {
 public:
  /// Throws DomainError on a non-positive coordinate and InvalidArgumentError
  /// when fewer than two coordinates are given or the sum is off by > 1e-14.
  explicit SimplexPoint(std::vector<double> coords);

  std::span<const double> coords() const { return coords_; }
  std::size_t dimension() const { return coords_.size(); }

 private:
  std::vector<double> coords_;
};

struct McEstimate {
  ComplexValue mean;
  double std_err = 0.0;     // standard error of the real part
  double std_err_im = 0.0;  // standard error of the imaginary part
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t rejected = 0;  // simplex draws redrawn for tiny coordinates
};

struct McOptions {
  /// Worker threads; 0 means EPIIHS_THREADS if set, else the hardware count.
  unsigned threads = 0;
};

/// Resolves McOptions::threads as documented there.
unsigned resolve_worker_count(unsigned requested);

struct Quad1DConfig {
  double truncation = 80.0;  // integrate over |u| <= truncation
  unsigned levels = 8;       // step halvings; final step is 2^-levels
};

struct Quad1DResult {
  double value = 0.0;
  double error_estimate = 0.0;  // |last level - previous level|
  std::uint64_t evaluations = 0;
};

/// (sum_j xi_m^j ln x_{j+1})^(m k): the log-power integrand with the
/// logarithm taken term by term on the real coordinates.
ComplexValue integrand_log_power(unsigned m, unsigned k, const SimplexPoint& x);

/// Uniform point on the simplex from normalised exponential spacings.
SimplexPoint sample_simplex_uniform(unsigned m, PhiloxStream& rng);

/// Monte Carlo estimate of S_{m_k}(inf) = (-1)^(mk)/(mk)! E[integrand] under
/// uniform sampling. Needs n_samples >= 1000. Deterministic in
/// (m, k, n_samples, seed) for any worker count.
McEstimate mc_harmonic_infinite(unsigned m, unsigned k, std::uint64_t n_samples,
                                std::uint64_t seed, McOptions options = {});

/// 2 int_U^inf u^(2k) e^-u du, the bound on what |u| <= U leaves out.
double quad_m2_tail_bound(unsigned k, double truncation);

/// S_{2_k}(inf) = 1/(2k)! int_R u^(2k) e^u/(1+e^u)^2 du by tanh-sinh
/// quadrature on |u| <= U. Throws ConfigError for an out-of-range config or
/// when the tail bound is not below 1e-14.
Quad1DResult quad_m2_detailed(unsigned k, const Quad1DConfig& config = {});
double quad_m2(unsigned k, const Quad1DConfig& config = {});

/// Monte Carlo estimate of int over the simplex of prod x_i^(alpha_i - 1),
/// to be compared with multibeta(alphas). Every alpha_i must be >= 1.
McEstimate multibeta_check(std::span<const double> alphas, std::uint64_t n_samples,
                           std::uint64_t seed, McOptions options = {});

}  // namespace epiihs
