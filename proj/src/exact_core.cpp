// Copyright 2026 The epiihs Authors
// SPDX-License-Identifier: Apache-2.0

#include "epiihs/exact_core.hpp"

#include <algorithm>
#include <string>

#include "epiihs/error.hpp"

namespace epiihs {

namespace {

// n^k saturated at limit + 1.
std::uint64_t saturating_power(std::uint64_t n, unsigned k, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (n != 0 && r > limit / n) return limit + 1;
    r *= n;
  }
  return r;
}

// C(n + k - 1, k): multisets of size k from n symbols, saturated at limit + 1.
std::uint64_t saturating_multiset_count(std::uint64_t n, unsigned k,
                                        std::uint64_t limit) {
  // Build C(n-1+i, i) incrementally; each step is an exact integer.
  unsigned __int128 c = 1;
  for (unsigned i = 1; i <= k; ++i) {
    c = c * (n - 1 + i) / i;
    if (c > limit) return limit + 1;
  }
  return static_cast<std::uint64_t>(c);
}

void enumeration_guard(std::uint64_t count, const char* what) {
  if (count > kEnumerationLimit) {
    throw EnumerationTooLargeError(std::string(what) + ": more than " +
                                   std::to_string(kEnumerationLimit) +
                                   " terms to enumerate");
  }
}

struct PartitionWalker {
  std::uint64_t max_part;
  std::optional<std::size_t> length;
  const std::function<void(std::span<const unsigned>)>& visit;
  std::vector<unsigned> parts;
  std::uint64_t visited = 0;

  bool feasible(std::uint64_t remaining, std::uint64_t cap) const {
    if (!length) return true;
    const std::uint64_t slots = *length - parts.size();
    if (slots == 0) return remaining == 0;
    return remaining >= slots && remaining <= slots * cap;
  }

  void descend(std::uint64_t remaining, std::uint64_t cap) {
    if (remaining == 0) {
      if (!length || parts.size() == *length) {
        ++visited;
        visit(parts);
      }
      return;
    }
    if (length && parts.size() == *length) return;
    for (std::uint64_t p = std::min(remaining, cap); p >= 1; --p) {
      parts.push_back(static_cast<unsigned>(p));
      if (feasible(remaining - p, p)) descend(remaining - p, p);
      parts.pop_back();
    }
  }
};

}  // namespace

Cutoff Cutoff::finite(std::uint64_t n) {
  if (n == 0) throw InvalidArgumentError("cutoff N must be >= 1");
  return Cutoff(n);
}

std::uint64_t Cutoff::value() const {
  if (!value_) throw InvalidArgumentError("operation requires a finite cutoff N");
  return *value_;
}

HarmonicSpec::HarmonicSpec(unsigned a, unsigned k, Cutoff cutoff)
    : a_(a), k_(k), cutoff_(cutoff) {
  if (a == 0) throw InvalidArgumentError("exponent a must be >= 1");
  if (cutoff.is_infinite() && k >= 1 && a < 2) {
    throw InvalidArgumentError("S_{a_k}(inf) diverges for a = 1 and k >= 1");
  }
}

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw InvalidArgumentError("partition parts must be positive and non-increasing");
    }
  }
}

std::uint64_t Partition::size() const {
  std::uint64_t s = 0;
  for (unsigned p : parts_) s += p;
  return s;
}

BigRational Partition::part_product() const {
  BigRational r(1);
  for (unsigned p : parts_) r *= BigRational(p);
  return r;
}

std::uint64_t for_each_partition(
    std::uint64_t total, std::uint64_t max_part, std::optional<std::size_t> length,
    const std::function<void(std::span<const unsigned>)>& visit) {
  PartitionWalker walker{max_part, length, visit, {}, 0};
  if (walker.feasible(total, max_part) || total == 0) {
    walker.descend(total, max_part);
  }
  return walker.visited;
}

BigRational brute_force_sum(const HarmonicSpec& spec) {
  const std::uint64_t n = spec.n();
  const unsigned k = spec.k();
  enumeration_guard(saturating_power(n, k, kEnumerationLimit), "brute_force_sum");

  // Odometer over the full cube {1..N}^k; keep non-increasing tuples only.
  std::vector<std::uint64_t> tuple(k, 1);
  BigRational sum;
  while (true) {
    bool ordered = true;
    std::uint64_t product = 1;
    for (unsigned i = 0; i < k; ++i) {
      if (i > 0 && tuple[i] > tuple[i - 1]) ordered = false;
      product *= tuple[i];
    }
    if (ordered) sum += BigRational::inverse_power(product, spec.a());

    unsigned pos = 0;
    while (pos < k && tuple[pos] == n) tuple[pos++] = 1;
    if (pos == k) break;
    ++tuple[pos];
  }
  return sum;
}

BigRational harmonic_sum_exact(const HarmonicSpec& spec) {
  const std::uint64_t n = spec.n();
  // level[j] holds S_{a_i}(j + 1) for the current depth i.
  std::vector<BigRational> level(n, BigRational(1));
  std::vector<BigRational> inv_powers;
  inv_powers.reserve(n);
  for (std::uint64_t j = 1; j <= n && spec.k() > 0; ++j) {
    inv_powers.push_back(BigRational::inverse_power(j, spec.a()));
  }
  for (unsigned depth = 1; depth <= spec.k(); ++depth) {
    BigRational running;
    for (std::uint64_t j = 0; j < n; ++j) {
      running += level[j] * inv_powers[j];
      level[j] = running;
    }
  }
  return level[n - 1];
}

BigRational partition_sum(const HarmonicSpec& spec) {
  const std::uint64_t n = spec.n();
  const unsigned k = spec.k();
  enumeration_guard(saturating_multiset_count(n, k, kEnumerationLimit),
                    "partition_sum");
  BigRational sum;
  for (std::uint64_t size = k; size <= k * n; ++size) {
    for_each_partition(size, n, k, [&](std::span<const unsigned> parts) {
      BigRational product(1);
      for (unsigned p : parts) product *= BigRational(p);
      sum += (BigRational(1) / product).pow(static_cast<int>(spec.a()));
    });
  }
  return sum;
}

BigRational qseries_coefficient(std::uint64_t n_max, std::uint64_t m,
                                const BigRational& t, unsigned a) {
  if (n_max == 0) throw InvalidArgumentError("N must be >= 1");
  if (a == 0) throw InvalidArgumentError("exponent a must be >= 1");
  std::vector<BigRational> series(m + 1);
  series[0] = BigRational(1);
  const BigRational t_pow = t.pow(static_cast<int>(a));
  for (std::uint64_t n = 1; n <= std::min(n_max, m); ++n) {
    // Multiply by the geometric series 1/(1 - c q^n); ascending j reuses the
    // already-updated entries, which is exactly the geometric expansion.
    const BigRational c = t_pow * BigRational::inverse_power(n, a);
    for (std::uint64_t j = n; j <= m; ++j) series[j] += c * series[j - n];
  }
  return series[m];
}

BigRational partition_weight_sum(std::uint64_t n_max, std::uint64_t m,
                                 const BigRational& t, unsigned a) {
  if (n_max == 0) throw InvalidArgumentError("N must be >= 1");
  if (a == 0) throw InvalidArgumentError("exponent a must be >= 1");
  const BigRational t_pow = t.pow(static_cast<int>(a));
  BigRational sum;
  for_each_partition(m, n_max, std::nullopt, [&](std::span<const unsigned> parts) {
    BigRational weight(1);
    for (unsigned p : parts) weight *= t_pow * BigRational::inverse_power(p, a);
    sum += weight;
  });
  return sum;
}

}  // namespace epiihs
