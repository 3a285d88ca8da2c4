// Copyright 2026 The epiihs Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace epiihs::cli {

using Json = nlohmann::ordered_json;

/// Exact value, serialised as the decimal "p/q" text.
struct RationalValue {
  std::string text;
};

struct ComplexPair {
  double re = 0.0;
  double im = 0.0;
};

struct EstimateValue {
  ComplexPair mean;
  double std_err = 0.0;
  double std_err_im = 0.0;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t rejected = 0;
};

/// Outcome counts of a verification run.
struct SummaryValue {
  std::size_t total = 0;
  std::size_t failed = 0;
};

using ResultValue =
    std::variant<RationalValue, double, ComplexPair, EstimateValue, SummaryValue>;

struct CheckEntry {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
};

struct RunReport {
  std::string command;
  Json inputs = Json::object();
  ResultValue result;
  std::vector<CheckEntry> checks;
  std::optional<std::uint64_t> seed;
  std::int64_t elapsed_ms = 0;
  /// Command-specific extras (per-route values, quadrature diagnostics).
  Json details = Json::object();

  bool all_passed() const;
};

Json to_json(const ResultValue& value);
Json to_json(const RunReport& report);
/// Two-space indented JSON followed by a newline.
std::string serialize(const RunReport& report);

/// One line per check plus the result, for standard error.
std::string human_summary(const RunReport& report);

}  // namespace epiihs::cli
