// Copyright 2026 The epiihs Authors
// SPDX-License-Identifier: Apache-2.0

#include "epiihs/quadrature.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <thread>

#include "epiihs/error.hpp"

namespace epiihs {

namespace {

// Running mean and second moment of the real and imaginary parts.
struct ChunkStats {
  std::uint64_t count = 0;
  double mean_re = 0.0;
  double m2_re = 0.0;
  double mean_im = 0.0;
  double m2_im = 0.0;
  std::uint64_t rejected = 0;

  void add(ComplexValue v) {
    ++count;
    const double n = static_cast<double>(count);
    const double d_re = v.real() - mean_re;
    mean_re += d_re / n;
    m2_re += d_re * (v.real() - mean_re);
    const double d_im = v.imag() - mean_im;
    mean_im += d_im / n;
    m2_im += d_im * (v.imag() - mean_im);
  }

  void merge(const ChunkStats& other) {
    if (other.count == 0) return;
    const double na = static_cast<double>(count);
    const double nb = static_cast<double>(other.count);
    const double n = na + nb;
    const double d_re = other.mean_re - mean_re;
    const double d_im = other.mean_im - mean_im;
    mean_re += d_re * nb / n;
    mean_im += d_im * nb / n;
    m2_re += other.m2_re + d_re * d_re * na * nb / n;
    m2_im += other.m2_im + d_im * d_im * na * nb / n;
    count += other.count;
    rejected += other.rejected;
  }
};

// Draws a uniform simplex point into `coords`; returns the number of redraws.
std::uint64_t draw_simplex(PhiloxStream& rng, std::span<double> coords) {
  std::uint64_t rejected = 0;
  while (true) {
    double total = 0.0;
    for (double& c : coords) {
      c = -std::log(rng.next_open_closed());
      total += c;
    }
    bool ok = total > 0.0;
    for (double& c : coords) {
      c /= total;
      ok = ok && c >= kMinCoordinate;
    }
    if (ok) return rejected;
    ++rejected;
  }
}

ComplexValue integer_power(ComplexValue base, unsigned exponent) {
  ComplexValue result = 1.0;
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

ComplexValue log_power(std::span<const ComplexValue> roots, unsigned power,
                       std::span<const double> coords) {
  ComplexValue sum = 0.0;
  for (std::size_t j = 0; j < coords.size(); ++j) sum += roots[j] * std::log(coords[j]);
  return integer_power(sum, power);
}

// Runs `sample(rng, coords)` n times in fixed-size chunks, chunk c drawing
// from PhiloxStream(seed, c), then merges the chunks in index order.
template <typename SampleFn>
ChunkStats run_chunked(unsigned dimension, std::uint64_t n_samples, std::uint64_t seed,
                       unsigned workers, const SampleFn& sample) {
  const std::uint64_t n_chunks = (n_samples + kChunkSize - 1) / kChunkSize;
  std::vector<ChunkStats> results(n_chunks);
  std::atomic<std::uint64_t> next{0};

  auto work = [&] {
    std::vector<double> coords(dimension);
    for (std::uint64_t c = next++; c < n_chunks; c = next++) {
      PhiloxStream rng(seed, c);
      const std::uint64_t begin = c * kChunkSize;
      const std::uint64_t count = std::min(kChunkSize, n_samples - begin);
      ChunkStats& stats = results[c];
      for (std::uint64_t i = 0; i < count; ++i) {
        stats.rejected += draw_simplex(rng, coords);
        stats.add(sample(coords));
      }
    }
  };

  const auto n_workers =
      static_cast<unsigned>(std::min<std::uint64_t>(std::max(workers, 1u), n_chunks));
  if (n_workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_workers);
    for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(work);
  }

  ChunkStats total;
  for (const ChunkStats& r : results) total.merge(r);
  return total;
}

McEstimate finish(const ChunkStats& stats, double scale, std::uint64_t seed) {
  const double n = static_cast<double>(stats.count);
  McEstimate est;
  est.mean = ComplexValue(stats.mean_re, stats.mean_im) * scale;
  est.std_err = std::fabs(scale) * std::sqrt(stats.m2_re / (n - 1.0) / n);
  est.std_err_im = std::fabs(scale) * std::sqrt(stats.m2_im / (n - 1.0) / n);
  est.n_samples = stats.count;
  est.seed = seed;
  est.rejected = stats.rejected;
  return est;
}

double factorial(unsigned n) {
  double f = 1.0;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

// e^u / (1 + e^u)^2, written in e^-|u| so it never overflows.
double logistic_density(double u) {
  const double e = std::exp(-std::fabs(u));
  return e / ((1.0 + e) * (1.0 + e));
}

}  // namespace

SimplexPoint::SimplexPoint(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) {
    throw InvalidArgumentError("simplex point needs at least two coordinates");
  }
  double total = 0.0;
  for (double c : coords_) {
    if (!(c > 0.0)) throw DomainError("simplex coordinates must be positive");
    total += c;
  }
  if (std::fabs(total - 1.0) > 1e-14) {
    throw InvalidArgumentError("simplex coordinates must sum to 1");
  }
}

unsigned resolve_worker_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("EPIIHS_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (*end != '\0' || value == 0 || value > 4096 || env[0] == '-') {
      throw ConfigError(std::string("EPIIHS_THREADS must be a positive integer, got '") +
                        env + "'");
    }
    return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

ComplexValue integrand_log_power(unsigned m, unsigned k, const SimplexPoint& x) {
  if (m < 2) throw InvalidArgumentError("m must be >= 2");
  if (x.dimension() != m) {
    throw InvalidArgumentError("simplex point has " + std::to_string(x.dimension()) +
                               " coordinates, expected " + std::to_string(m));
  }
  const RootsOfUnity roots = roots_of_unity(m);
  return log_power(roots.values, m * k, x.coords());
}

SimplexPoint sample_simplex_uniform(unsigned m, PhiloxStream& rng) {
  if (m < 2) throw InvalidArgumentError("m must be >= 2");
  std::vector<double> coords(m);
  draw_simplex(rng, coords);
  return SimplexPoint(std::move(coords));
}

McEstimate mc_harmonic_infinite(unsigned m, unsigned k, std::uint64_t n_samples,
                                std::uint64_t seed, McOptions options) {
  if (m < 2) throw InvalidArgumentError("m must be >= 2");
  if (k < 1) throw InvalidArgumentError("k must be >= 1");
  if (n_samples < 1000) throw InvalidArgumentError("n_samples must be >= 1000");
  const unsigned power = m * k;
  if (power > 170) throw InvalidArgumentError("m*k too large: (mk)! overflows");

  const RootsOfUnity roots = roots_of_unity(m);
  const ChunkStats stats =
      run_chunked(m, n_samples, seed, resolve_worker_count(options.threads),
                  [&](std::span<const double> coords) {
                    return log_power(roots.values, power, coords);
                  });
  // The (m-1)! prefactor cancels the simplex volume 1/(m-1)!.
  const double sign = power % 2 == 0 ? 1.0 : -1.0;
  return finish(stats, sign / factorial(power), seed);
}

double quad_m2_tail_bound(unsigned k, double truncation) {
  // 2 (2k)! e^-U sum_{j=0}^{2k} U^j / j!, summed in log space.
  const unsigned n = 2 * k;
  const double log_n_fact = std::lgamma(n + 1.0);
  double sum = 0.0;
  for (unsigned j = 0; j <= n; ++j) {
    sum += std::exp(log_n_fact - truncation + j * std::log(truncation) -
                    std::lgamma(j + 1.0));
  }
  return 2.0 * sum;
}

Quad1DResult quad_m2_detailed(unsigned k, const Quad1DConfig& config) {
  const double u_max = config.truncation;
  if (!(u_max >= 10.0) || !std::isfinite(u_max)) {
    throw ConfigError("quadrature truncation U must be >= 10");
  }
  if (config.levels < 3 || config.levels > 12) {
    throw ConfigError("quadrature levels must be within [3, 12]");
  }
  const double tail = quad_m2_tail_bound(k, u_max);
  if (!(tail < 1e-14)) {
    throw ConfigError("truncation U = " + std::to_string(u_max) +
                      " leaves a tail bound of " + std::to_string(tail) +
                      " for k = " + std::to_string(k) + "; increase U");
  }

  const unsigned power = 2 * k;
  auto f = [&](double u) {
    return (power == 0 ? 1.0 : std::pow(u, static_cast<int>(power))) * logistic_density(u);
  };
  // Tanh-sinh on [-U, U]: u = U tanh(pi/2 sinh tau), tau in [-4, 4]; past
  // |tau| = 4 the weights are below 1e-35.
  constexpr double kTauMax = 4.0;
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  Quad1DResult result;
  auto node_sum = [&](double tau) {
    const double s = kHalfPi * std::sinh(tau);
    const double c = std::cosh(s);
    const double weight = kHalfPi * std::cosh(tau) / (c * c);
    const double x = std::tanh(s);
    result.evaluations += 2;
    return weight * (f(u_max * x) + f(-u_max * x));
  };

  double h = 1.0;
  double sum = kHalfPi * f(0.0);  // tau = 0 node, weight pi/2
  result.evaluations = 1;
  for (double tau = h; tau <= kTauMax; tau += h) sum += node_sum(tau);
  double estimate = u_max * h * sum;
  double previous = estimate;
  for (unsigned level = 1; level <= config.levels; ++level) {
    h /= 2.0;
    const auto steps = static_cast<std::uint64_t>(kTauMax / h);
    for (std::uint64_t i = 1; i <= steps; i += 2) sum += node_sum(i * h);
    previous = estimate;
    estimate = u_max * h * sum;
  }
  result.value = estimate / factorial(power);
  result.error_estimate = std::fabs(estimate - previous) / factorial(power);
  return result;
}

double quad_m2(unsigned k, const Quad1DConfig& config) {
  return quad_m2_detailed(k, config).value;
}

McEstimate multibeta_check(std::span<const double> alphas, std::uint64_t n_samples,
                           std::uint64_t seed, McOptions options) {
  const auto m = static_cast<unsigned>(alphas.size());
  if (m < 2) throw InvalidArgumentError("multibeta_check needs at least two parameters");
  for (double a : alphas) {
    if (!(a >= 1.0) || !std::isfinite(a)) {
      throw DomainError("multibeta_check requires every alpha >= 1");
    }
  }
  if (n_samples < 2) throw InvalidArgumentError("n_samples must be >= 2");

  const ChunkStats stats =
      run_chunked(m, n_samples, seed, resolve_worker_count(options.threads),
                  [&](std::span<const double> coords) {
                    double v = 1.0;
                    for (unsigned i = 0; i < m; ++i) {
                      if (alphas[i] != 1.0) v *= std::pow(coords[i], alphas[i] - 1.0);
                    }
                    return ComplexValue(v, 0.0);
                  });
  // Uniform density on the simplex is (m-1)!; the integral is E[f] / (m-1)!.
  return finish(stats, 1.0 / factorial(m - 1), seed);
}

}  // namespace epiihs
