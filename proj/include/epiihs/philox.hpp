// Copyright 2026 The epiihs Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>

namespace epiihs {

/// Philox4x32-10 counter-based generator (Salmon et al., Random123).
/// Stateless: the output is a pure function of counter and key.
using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key);

/// Sequential view of the Philox stream for one (seed, chunk) pair.
///
/// The key is the 64-bit seed; the chunk index fills the upper half of the
/// counter and the block index the lower half, so distinct chunks never share
/// a block and any chunk can be regenerated independently.
class PhiloxStream {
 public:
  PhiloxStream(std::uint64_t seed, std::uint64_t chunk);

  std::uint64_t next_u64();
  /// Uniform double in (0, 1] with 53 random bits.
  double next_open_closed();

 private:
  void refill();

  PhiloxKey key_;
  std::uint64_t chunk_;
  std::uint64_t block_ = 0;
  PhiloxCounter buffer_{};
  unsigned used_ = 4;
};

}  // namespace epiihs
