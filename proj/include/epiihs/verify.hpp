// Copyright 2026 The epiihs Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace epiihs::verify {

enum class Suite { Exact, Series, Gamma, Integral, All };

std::optional<Suite> parse_suite(std::string_view name);

/// One verification outcome. `measured` is compared against `tolerance`
/// (exact checks report a mismatch count against tolerance 0).
struct Check {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  unsigned threads = 0;
};

std::vector<Check> run_suite(Suite suite, const SuiteOptions& options = {});

}  // namespace epiihs::verify
