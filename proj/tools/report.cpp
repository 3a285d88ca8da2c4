// Copyright 2026 The epiihs Authors
// SPDX-License-Identifier: Apache-2.0

#include "report.hpp"

#include <sstream>

namespace epiihs::cli {

namespace {

Json complex_json(const ComplexPair& z) { return Json{{"re", z.re}, {"im", z.im}}; }

struct ResultToJson {
  Json operator()(const RationalValue& q) const {
    return Json{{"type", "rational"}, {"value", q.text}};
  }
  Json operator()(double x) const { return Json{{"type", "float"}, {"value", x}}; }
  Json operator()(const ComplexPair& z) const {
    return Json{{"type", "complex"}, {"re", z.re}, {"im", z.im}};
  }
  Json operator()(const EstimateValue& e) const {
    return Json{{"type", "estimate"},     {"mean", complex_json(e.mean)},
                {"stderr", e.std_err},    {"stderr_im", e.std_err_im},
                {"n_samples", e.n_samples}, {"seed", e.seed},
                {"rejected", e.rejected}};
  }
  Json operator()(const SummaryValue& s) const {
    return Json{{"type", "summary"}, {"total", s.total}, {"failed", s.failed}};
  }
};

struct ResultToText {
  std::string operator()(const RationalValue& q) const { return q.text; }
  std::string operator()(double x) const { return fixed(x); }
  std::string operator()(const ComplexPair& z) const {
    return fixed(z.re) + (z.im < 0 ? " - " : " + ") + fixed(std::abs(z.im)) + "i";
  }
  std::string operator()(const EstimateValue& e) const {
    return fixed(e.mean.re) + " +/- " + fixed(e.std_err) + " (im " + fixed(e.mean.im) +
           " +/- " + fixed(e.std_err_im) + ", n=" + std::to_string(e.n_samples) + ")";
  }
  std::string operator()(const SummaryValue& s) const {
    return std::to_string(s.total - s.failed) + "/" + std::to_string(s.total) +
           " checks passed";
  }

  static std::string fixed(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
  }
};

}  // namespace

bool RunReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

Json to_json(const ResultValue& value) { return std::visit(ResultToJson{}, value); }

Json to_json(const RunReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"status", c.passed ? "pass" : "fail"},
                      {"measured", c.measured},
                      {"tolerance", c.tolerance}});
  }
  Json j;
  j["command"] = report.command;
  j["inputs"] = report.inputs;
  j["result"] = to_json(report.result);
  j["checks"] = std::move(checks);
  j["seed"] = report.seed ? Json(*report.seed) : Json(nullptr);
  j["elapsed_ms"] = report.elapsed_ms;
  if (!report.details.empty()) j["details"] = report.details;
  return j;
}

std::string serialize(const RunReport& report) { return to_json(report).dump(2) + "\n"; }

std::string human_summary(const RunReport& report) {
  std::ostringstream os;
  os << report.command << ": " << std::visit(ResultToText{}, report.result) << "\n";
  for (const auto& c : report.checks) {
    os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name
       << "  measured=" << ResultToText::fixed(c.measured)
       << "  tolerance=" << ResultToText::fixed(c.tolerance) << "\n";
  }
  return os.str();
}

}  // namespace epiihs::cli
