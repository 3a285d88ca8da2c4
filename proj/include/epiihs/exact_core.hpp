// Copyright 2026 The epiihs Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "epiihs/big_rational.hpp"

namespace epiihs {

/// Upper limit on tuples/partitions visited by the enumerating routes.
inline constexpr std::uint64_t kEnumerationLimit = 10'000'000;

/// Cutoff N of a harmonic sum: a positive integer or infinity.
class Cutoff {
 public:
  static Cutoff finite(std::uint64_t n);
  static Cutoff infinity() { return Cutoff(); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws InvalidArgumentError when infinite.
  std::uint64_t value() const;

 private:
  Cutoff() = default;
  explicit Cutoff(std::uint64_t n) : value_(n) {}

  std::optional<std::uint64_t> value_;
};

/// Names one equal-index sum S_{a,...,a}(N) with k copies of the exponent a.
/// Construction validates the index bundle; an infinite cutoff with k >= 1
/// needs a >= 2 for convergence.
class HarmonicSpec {
 public:
  HarmonicSpec(unsigned a, unsigned k, Cutoff cutoff);

  unsigned a() const { return a_; }
  unsigned k() const { return k_; }
  const Cutoff& cutoff() const { return cutoff_; }
  /// Shorthand for cutoff().value().
  std::uint64_t n() const { return cutoff_.value(); }

 private:
  unsigned a_;
  unsigned k_;
  Cutoff cutoff_;
};

/// Non-increasing list of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidArgumentError unless parts are positive and non-increasing.
  explicit Partition(std::vector<unsigned> parts);

  std::span<const unsigned> parts() const { return parts_; }
  std::uint64_t size() const;
  std::size_t length() const { return parts_.size(); }
  /// Product of the parts as an exact integer (1 for the empty partition).
  BigRational part_product() const;

 private:
  std::vector<unsigned> parts_;
};

/// Visits every partition of `total` with all parts <= max_part, in reverse
/// lexicographic order (largest first part first). When `length` is given,
/// only partitions with exactly that many parts are visited. Returns the
/// number of partitions visited. The visitor sees a view of the parts that is
/// only valid during the call.
std::uint64_t for_each_partition(
    std::uint64_t total, std::uint64_t max_part, std::optional<std::size_t> length,
    const std::function<void(std::span<const unsigned>)>& visit);

/// Sums 1/(n_1...n_k)^a over N >= n_1 >= ... >= n_k >= 1 by scanning the whole
/// cube {1..N}^k. Throws EnumerationTooLargeError when N^k exceeds the limit.
BigRational brute_force_sum(const HarmonicSpec& spec);

/// Same sum through the nesting recurrence S_k(n) = sum_{j<=n} S_{k-1}(j)/j^a.
BigRational harmonic_sum_exact(const HarmonicSpec& spec);

/// Same sum as a partition sum: all partitions with exactly k parts, each part
/// at most N, weighted by 1/(product of parts)^a. Enumerated by partition size.
BigRational partition_sum(const HarmonicSpec& spec);

/// Coefficient of q^M in prod_{n=1}^{N} 1/(1 - (t^a/n^a) q^n), by truncated
/// series multiplication.
BigRational qseries_coefficient(std::uint64_t n_max, std::uint64_t m,
                                const BigRational& t, unsigned a);

/// Sum over partitions of M with parts in {1..N} of prod_i t^a/lambda_i^a.
BigRational partition_weight_sum(std::uint64_t n_max, std::uint64_t m,
                                 const BigRational& t, unsigned a);

}  // namespace epiihs
