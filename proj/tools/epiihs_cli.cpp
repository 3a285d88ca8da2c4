// Copyright 2026 The epiihs Authors
// SPDX-License-Identifier: Apache-2.0

// epiihs: command-line front end over the libepiihs C API.
//
//   epiihs sum -a 2 -k 2 -N 2 --method brute
//   epiihs genfunc -m 3 -t 0.5 --route gamma,series
//   epiihs integrate -m 3 -k 1 --engine mc -n 10000000 --seed 42
//   epiihs verify --suite all --seed 42
//
// One JSON report goes to stdout, a readable summary to stderr.
// Exit codes: 0 success, 1 failed check, 2 invalid input, 3 resource guard.

#include <chrono>
#include <cmath>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "epiihs/epiihs.h"
#include "report.hpp"

namespace {

using epiihs::cli::CheckEntry;
using epiihs::cli::ComplexPair;
using epiihs::cli::EstimateValue;
using epiihs::cli::Json;
using epiihs::cli::RationalValue;
using epiihs::cli::RunReport;
using epiihs::cli::SummaryValue;

constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitResourceGuard = 3;
constexpr std::uint64_t kDefaultSeed = 42;

class CliFailure : public std::runtime_error {
 public:
  CliFailure(int exit_code, const std::string& what)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

void check_status(epiihs_status status) {
  if (status == EPIIHS_OK) return;
  const int code = (status == EPIIHS_ERR_ENUMERATION_TOO_LARGE || status == EPIIHS_ERR_INTERNAL)
                       ? kExitResourceGuard
                       : kExitInvalidInput;
  throw CliFailure(code, std::string(epiihs_status_string(status)) + ": " +
                             epiihs_last_error());
}

struct RationalDeleter {
  void operator()(epiihs_rational* q) const { epiihs_rational_free(q); }
};
using RationalPtr = std::unique_ptr<epiihs_rational, RationalDeleter>;

struct CheckListDeleter {
  void operator()(epiihs_check_list* l) const { epiihs_check_list_free(l); }
};
using CheckListPtr = std::unique_ptr<epiihs_check_list, CheckListDeleter>;

std::string rational_text(const epiihs_rational* q) {
  std::string text(epiihs_rational_to_string(q, nullptr, 0), '\0');
  epiihs_rational_to_string(q, text.data(), text.size() + 1);
  return text;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

// ---------------------------------------------------------------------------
// sum

struct SumArgs {
  unsigned a = 1;
  unsigned k = 1;
  std::string n = "1";
  std::string method;
};

RunReport run_sum(const SumArgs& args) {
  RunReport report;
  report.command = "sum";
  const bool infinite = args.n == "inf";
  std::string method = args.method.empty() ? (infinite ? "series" : "recurrence") : args.method;
  report.inputs = {{"a", args.a}, {"k", args.k}, {"N", args.n}, {"method", method}};

  if (infinite) {
    if (method != "series") {
      throw CliFailure(kExitInvalidInput, "N=inf requires --method series");
    }
    double value = 0.0;
    check_status(epiihs_harmonic_sum_infinite(args.a, args.k, &value));
    report.result = value;
    return report;
  }

  std::uint64_t n = 0;
  try {
    std::size_t used = 0;
    n = std::stoull(args.n, &used);
    if (used != args.n.size() || args.n.front() == '-') throw std::invalid_argument("N");
  } catch (const std::exception&) {
    throw CliFailure(kExitInvalidInput, "N must be a positive integer or 'inf'");
  }
  epiihs_sum_method m = EPIIHS_SUM_RECURRENCE;
  if (method == "brute") m = EPIIHS_SUM_BRUTE;
  else if (method == "partition") m = EPIIHS_SUM_PARTITION;
  else if (method == "series") m = EPIIHS_SUM_SERIES;
  else if (method != "recurrence") throw CliFailure(kExitInvalidInput, "unknown method " + method);

  epiihs_rational* raw = nullptr;
  check_status(epiihs_harmonic_sum(args.a, args.k, n, m, &raw));
  RationalPtr value(raw);
  report.result = RationalValue{rational_text(value.get())};
  return report;
}

// ---------------------------------------------------------------------------
// genfunc

struct GenfuncArgs {
  unsigned m = 2;
  double t = 0.0;
  std::string routes = "gamma";
  std::uint64_t n = 1000;
  unsigned order = 32;
};

struct RouteValue {
  std::string name;
  ComplexPair value;
  double uncertainty = 0.0;  // bound on the distance to the infinite product
};

// Bound on |prod_{n>N} 1/(1 - (t/n)^m) - 1| relative to the finite product.
double finite_product_gap(unsigned m, std::uint64_t n, double t) {
  if (m < 2) return INFINITY;
  const double big_n = static_cast<double>(n);
  const double x_n = std::pow(std::fabs(t) / big_n, m);
  const double log_bound =
      std::pow(std::fabs(t), m) / ((m - 1.0) * std::pow(big_n, m - 1.0)) / (1.0 - x_n);
  return std::expm1(log_bound);
}

RunReport run_genfunc(const GenfuncArgs& args) {
  RunReport report;
  report.command = "genfunc";
  const auto routes = split_list(args.routes);
  report.inputs = {{"m", args.m}, {"t", args.t}, {"route", args.routes}};
  if (!(std::fabs(args.t) < 1.0)) throw CliFailure(kExitInvalidInput, "requires |t| < 1");
  if (routes.empty()) throw CliFailure(kExitInvalidInput, "no route given");

  std::vector<RouteValue> values;
  for (const auto& route : routes) {
    RouteValue rv{route, {}, 0.0};
    if (route == "gamma") {
      epiihs_complex z{};
      check_status(epiihs_gamma_product(args.m, args.t, &z));
      rv.value = {z.re, z.im};
    } else if (route == "series") {
      double bound = 0.0;
      check_status(epiihs_genfunc_series(args.m, args.t, args.order, &rv.value.re, &bound));
      rv.uncertainty = bound;
      report.inputs["K"] = args.order;
    } else if (route == "product-finite") {
      check_status(epiihs_finite_product(args.m, args.n, args.t, &rv.value.re));
      rv.uncertainty = std::fabs(rv.value.re) * finite_product_gap(args.m, args.n, args.t);
      report.inputs["N"] = args.n;
    } else {
      throw CliFailure(kExitInvalidInput, "unknown route " + route);
    }
    values.push_back(rv);
  }

  if (values.front().name == "gamma") {
    report.result = values.front().value;
  } else {
    report.result = values.front().value.re;
  }
  Json per_route = Json::object();
  for (const auto& v : values) {
    per_route[v.name] = v.name == "gamma" ? epiihs::cli::to_json(v.value)
                                          : epiihs::cli::to_json(v.value.re);
    if (v.uncertainty > 0.0) per_route[v.name]["bound"] = v.uncertainty;
  }
  report.details["routes"] = per_route;

  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      const double delta = std::fabs(values[i].value.re - values[j].value.re);
      const double tolerance = values[i].uncertainty + values[j].uncertainty + 1e-10;
      report.checks.push_back({"delta " + values[i].name + "-" + values[j].name,
                               delta <= tolerance, delta, tolerance});
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// integrate

struct IntegrateArgs {
  unsigned m = 2;
  unsigned k = 1;
  std::string engine = "quad";
  std::uint64_t n_samples = 1'000'000;
  std::uint64_t seed = kDefaultSeed;
  double truncation = 80.0;
  unsigned levels = 8;
};

RunReport run_integrate(const IntegrateArgs& args) {
  RunReport report;
  report.command = "integrate";
  report.inputs = {{"m", args.m}, {"k", args.k}, {"engine", args.engine}};

  double reference = 0.0;
  const bool has_reference =
      args.m >= 2 && epiihs_harmonic_sum_infinite(args.m, args.k, &reference) == EPIIHS_OK;

  if (args.engine == "quad") {
    if (args.m != 2) throw CliFailure(kExitInvalidInput, "--engine quad requires m = 2");
    report.inputs["U"] = args.truncation;
    report.inputs["levels"] = args.levels;
    epiihs_quad_result r{};
    check_status(epiihs_quad_m2(args.k, args.truncation, args.levels, &r));
    report.result = r.value;
    report.details = {{"error_estimate", r.error_estimate},
                      {"tail_bound", r.tail_bound},
                      {"evaluations", r.evaluations}};
    if (has_reference) {
      const double delta = std::fabs(r.value - reference);
      report.details["reference"] = reference;
      report.checks.push_back({"quad vs series reference", delta <= 1e-10, delta, 1e-10});
    }
    return report;
  }
  if (args.engine != "mc") throw CliFailure(kExitInvalidInput, "unknown engine " + args.engine);

  report.inputs["n_samples"] = args.n_samples;
  report.seed = args.seed;
  epiihs_mc_estimate e{};
  check_status(epiihs_mc_harmonic(args.m, args.k, args.n_samples, args.seed, 0, &e));
  report.result = EstimateValue{{e.mean.re, e.mean.im}, e.std_err, e.std_err_im,
                                e.n_samples, e.seed, e.rejected};
  if (has_reference) {
    const double delta = std::fabs(e.mean.re - reference);
    report.details["reference"] = reference;
    report.checks.push_back({"mc vs series reference (4 sigma)", delta <= 4.0 * e.std_err,
                             delta, 4.0 * e.std_err});
  }
  const double im = std::fabs(e.mean.im);
  report.checks.push_back(
      {"imaginary part (4 sigma)", im <= 4.0 * e.std_err_im, im, 4.0 * e.std_err_im});
  return report;
}

// ---------------------------------------------------------------------------
// verify

RunReport run_verify(const std::string& suite, std::uint64_t seed) {
  RunReport report;
  report.command = "verify";
  report.inputs = {{"suite", suite}};
  report.seed = seed;
  epiihs_check_list* raw = nullptr;
  check_status(epiihs_verify(suite.c_str(), seed, 0, &raw));
  CheckListPtr list(raw);
  SummaryValue summary;
  for (std::size_t i = 0; i < epiihs_check_list_size(list.get()); ++i) {
    epiihs_check c{};
    check_status(epiihs_check_list_get(list.get(), i, &c));
    report.checks.push_back({c.name, c.passed != 0, c.measured, c.tolerance});
    ++summary.total;
    if (!c.passed) ++summary.failed;
  }
  report.result = summary;
  return report;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equal-index harmonic sums: exact values, generating functions, integrals"};
  app.require_subcommand(1);

  SumArgs sum_args;
  auto* sum = app.add_subcommand("sum", "S_{a_k}(N) exactly, or at N = inf numerically");
  sum->add_option("-a", sum_args.a, "exponent a")->required()->check(CLI::PositiveNumber);
  sum->add_option("-k", sum_args.k, "number of nested indices")->required();
  sum->add_option("-N", sum_args.n, "cutoff: positive integer or 'inf'")->required();
  sum->add_option("--method", sum_args.method, "brute | recurrence | partition | series")
      ->check(CLI::IsMember({"brute", "recurrence", "partition", "series"}));

  GenfuncArgs gen_args;
  auto* gen = app.add_subcommand("genfunc", "generating function value at t");
  gen->add_option("-m", gen_args.m, "exponent m")->required();
  gen->add_option("-t", gen_args.t, "evaluation point, |t| < 1")->required();
  gen->add_option("--route", gen_args.routes,
                  "comma-separated: product-finite, gamma, series");
  gen->add_option("-N", gen_args.n, "cutoff for product-finite")->check(CLI::PositiveNumber);
  gen->add_option("-K", gen_args.order, "series truncation order");

  IntegrateArgs int_args;
  auto* integ = app.add_subcommand("integrate", "integral representations of S_{m_k}(inf)");
  integ->add_option("-m", int_args.m, "exponent m")->required();
  integ->add_option("-k", int_args.k, "number of nested indices")->required();
  integ->add_option("--engine", int_args.engine, "quad | mc");
  integ->add_option("-n,--samples", int_args.n_samples, "Monte Carlo samples");
  integ->add_option("--seed", int_args.seed, "Monte Carlo seed");
  integ->add_option("-U,--truncation", int_args.truncation, "quadrature window |u| <= U");
  integ->add_option("--levels", int_args.levels, "quadrature refinement levels");

  std::string suite = "all";
  std::uint64_t verify_seed = kDefaultSeed;
  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--suite", suite, "exact | series | gamma | integral | all")
      ->check(CLI::IsMember({"exact", "series", "gamma", "integral", "all"}));
  ver->add_option("--seed", verify_seed, "Monte Carlo seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidInput;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    RunReport report;
    if (sum->parsed()) report = run_sum(sum_args);
    else if (gen->parsed()) report = run_genfunc(gen_args);
    else if (integ->parsed()) report = run_integrate(int_args);
    else report = run_verify(suite, verify_seed);
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    std::cout << epiihs::cli::serialize(report);
    std::cerr << epiihs::cli::human_summary(report);
    return report.all_passed() ? 0 : kExitCheckFailed;
  } catch (const CliFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  }
}
