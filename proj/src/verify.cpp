// Copyright 2026 The epiihs Authors
// SPDX-License-Identifier: Apache-2.0

#include "epiihs/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "epiihs/exact_core.hpp"
#include "epiihs/quadrature.hpp"
#include "epiihs/series_engine.hpp"
#include "epiihs/special_fn.hpp"

namespace epiihs::verify {

namespace {

constexpr double kPi = std::numbers::pi;

template <typename... Parts>
std::string label(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

Check at_most(std::string name, double measured, double tolerance) {
  return {std::move(name), measured <= tolerance, measured, tolerance};
}

double relative(double value, double reference) {
  return std::fabs(value - reference) / std::fabs(reference);
}

void exact_suite(std::vector<Check>& out) {
  for (unsigned a = 1; a <= 3; ++a) {
    int mismatches = 0;
    for (unsigned k = 0; k <= 4; ++k) {
      for (std::uint64_t n = 1; n <= 8; ++n) {
        const HarmonicSpec spec(a, k, Cutoff::finite(n));
        const BigRational recurrence = harmonic_sum_exact(spec);
        if (brute_force_sum(spec) != recurrence || partition_sum(spec) != recurrence) {
          ++mismatches;
        }
      }
    }
    out.push_back(at_most(label("exact.three_way[a=", a, "]"), mismatches, 0));
  }

  const std::array<BigRational, 3> ts = {BigRational(1), BigRational(1, 2),
                                         BigRational(2, 3)};
  for (unsigned a = 1; a <= 2; ++a) {
    for (const BigRational& t : ts) {
      int mismatches = 0;
      for (std::uint64_t n = 1; n <= 5; ++n) {
        for (std::uint64_t m = 0; m <= 12; ++m) {
          if (qseries_coefficient(n, m, t, a) != partition_weight_sum(n, m, t, a)) {
            ++mismatches;
          }
        }
      }
      out.push_back(at_most(label("exact.qseries_identity[a=", a, ",t=", t, "]"),
                            mismatches, 0));
    }
  }

  int violations = 0;
  for (unsigned a = 1; a <= 3; ++a) {
    for (unsigned k = 0; k <= 4; ++k) {
      if (harmonic_sum_exact(HarmonicSpec(a, k, Cutoff::finite(1))) != BigRational(1)) {
        ++violations;
      }
      BigRational previous(0);
      for (std::uint64_t n = 1; n <= 12; ++n) {
        const BigRational current = harmonic_sum_exact(HarmonicSpec(a, k, Cutoff::finite(n)));
        if (current < previous) ++violations;
        previous = current;
      }
    }
  }
  out.push_back(at_most("exact.monotone_in_N", violations, 0));
}

void series_suite(std::vector<Check>& out) {
  for (unsigned a = 1; a <= 3; ++a) {
    int mismatches = 0;
    for (std::uint64_t n = 1; n <= 10; ++n) {
      const auto series = genfunc_coeffs_finite(a, n, 8);
      for (unsigned k = 0; k <= 8; ++k) {
        if (series.coeffs[k] != harmonic_sum_exact(HarmonicSpec(a, k, Cutoff::finite(n)))) {
          ++mismatches;
        }
      }
    }
    out.push_back(at_most(label("series.theorem1[a=", a, "]"), mismatches, 0));
  }

  {
    const double target = kPi * kPi / 6.0;
    const double partial = genfunc_coeffs_finite(2, 10000, 1).coeffs[1].to_double();
    const double gap = target - partial;
    Check c = at_most("series.limit_gap[m=2,k=1,N=10000]", gap, 1.1e-4);
    c.passed = c.passed && gap > 0.0;
    out.push_back(c);
  }

  double worst = 0.0;
  for (unsigned a = 1; a <= 3; ++a) {
    for (std::uint64_t n = 1; n <= 10; ++n) {
      const auto p_exact = power_sums(a, n, 8);
      std::vector<double> p_float;
      for (const auto& p : p_exact) p_float.push_back(p.to_double());
      const auto h_exact = homogeneous_from_power_sums<BigRational>(p_exact, 8);
      const auto h_float = homogeneous_from_power_sums<double>(p_float, 8);
      for (unsigned k = 0; k <= 8; ++k) {
        worst = std::max(worst, relative(h_float[k], h_exact[k].to_double()));
      }
    }
  }
  out.push_back(at_most("series.exact_vs_float", worst, 1e-12));

  // S_{2_k}(inf) = 2 (1 - 2^(1-2k)) zeta(2k), the coefficients of pi t / sin(pi t).
  const auto inf2 = genfunc_coeffs_infinite(2, 16);
  double worst_inf = 0.0;
  for (unsigned k = 1; k <= 16; ++k) {
    const double closed = 2.0 * (1.0 - std::ldexp(1.0, 1 - 2 * static_cast<int>(k))) *
                          zeta_ref(2 * k);
    worst_inf = std::max(worst_inf, relative(inf2.coeffs[k], closed));
  }
  out.push_back(at_most("series.infinite_m2_closed_form[k<=16]", worst_inf, 1e-12));
}

void gamma_suite(std::vector<Check>& out) {
  for (int i = 1; i <= 9; ++i) {
    const double t = i / 10.0;
    const double reflection = kPi * t / std::sin(kPi * t);
    out.push_back(at_most(label("gamma.reflection[t=", t, "]"),
                          relative(gamma_product(2, t).real(), reflection), 1e-12));
  }

  for (unsigned m = 2; m <= 4; ++m) {
    const auto series = genfunc_coeffs_infinite(m, kDefaultSeriesOrder);
    for (double t : {0.2, 0.5, 0.8}) {
      const ComplexValue g = gamma_product(m, t);
      const double delta = std::fabs(g.real() - evaluate(series, t));
      out.push_back(at_most(label("gamma.series_consistency[m=", m, ",t=", t, "]"), delta,
                            series_tail_bound(m, t, kDefaultSeriesOrder) + 1e-10));
      out.push_back(at_most(label("gamma.imag_part[m=", m, ",t=", t, "]"),
                            std::fabs(g.imag()), 1e-11));
    }
  }

  for (unsigned m = 2; m <= 3; ++m) {
    for (double t : {0.2, 0.5, 0.8}) {
      const double limit = gamma_product(m, t).real();
      double violation = 0.0;
      double previous = 1.0;
      for (std::uint64_t n : {10, 100, 1000, 10000}) {
        const double value = finite_product(m, n, t);
        violation = std::max({violation, previous - value, value - limit});
        previous = value;
      }
      out.push_back(at_most(label("gamma.product_convergence[m=", m, ",t=", t, "]"),
                            violation, 0.0));
    }
  }

  double worst_beta = 0.0;
  for (std::uint64_t n = 1; n <= 50; ++n) {
    for (int i = 1; i <= 9; ++i) {
      const double t = i / 10.0;
      const double via_beta =
          (static_cast<double>(n) * beta(ComplexValue(n, 0.0), ComplexValue(1.0 - t, 0.0)))
              .real();
      worst_beta = std::max(worst_beta, relative(via_beta, finite_product(1.0, n, t)));
    }
  }
  out.push_back(at_most("gamma.beta_identity[N<=50]", worst_beta, 1e-11));

  {
    const double root_pi = std::sqrt(kPi);
    double previous = INFINITY;
    bool monotone = true;
    double last = 0.0;
    for (std::uint64_t n : {10, 100, 1000, 10000}) {
      last = std::abs(beta_limit(ComplexValue(0.5, 0.0), n) - root_pi);
      monotone = monotone && last < previous;
      previous = last;
    }
    Check c = at_most("gamma.beta_limit[z=1/2,N=10^4]", last, 1e-4);
    c.passed = c.passed && monotone;
    out.push_back(c);
  }

  double worst_conj = 0.0;
  for (double re = -2.75; re <= 5.0; re += 0.5) {
    for (double im = 0.25; im <= 2.0; im += 0.25) {
      const ComplexValue z(re, im);
      const ComplexValue g = gamma_complex(z);
      worst_conj = std::max(worst_conj, std::abs(gamma_complex(std::conj(z)) - std::conj(g)) /
                                            std::abs(g));
    }
  }
  out.push_back(at_most("gamma.conjugate_symmetry", worst_conj, 1e-15));

  double worst_roots = 0.0;
  for (unsigned m = 2; m <= 64; ++m) {
    ComplexValue sum = 0.0;
    for (const auto& v : roots_of_unity(m).values) sum += v;
    worst_roots = std::max(worst_roots, std::abs(sum));
  }
  out.push_back(at_most("gamma.roots_sum[m<=64]", worst_roots, 1e-14));

  out.push_back(at_most("gamma.zeta_ref[s=2]", std::fabs(zeta_ref(2) - kPi * kPi / 6.0),
                        1e-15));
}

Check within_sigma(std::string name, double measured, double std_err) {
  return at_most(std::move(name), measured, 4.0 * std_err);
}

void integral_suite(std::vector<Check>& out, const SuiteOptions& options) {
  const McOptions mc{options.threads};
  const auto series2 = genfunc_coeffs_infinite(2, 5);
  for (unsigned k = 0; k <= 5; ++k) {
    out.push_back(at_most(label("integral.quad_m2[k=", k, "]"),
                          std::fabs(quad_m2(k) - series2.coeffs[k]), 1e-10));
  }

  struct Run {
    unsigned m;
    unsigned k;
    std::uint64_t n;
  };
  for (const Run& run : {Run{2, 1, 1'000'000}, Run{3, 1, 10'000'000},
                         Run{4, 1, 10'000'000}, Run{2, 2, 1'000'000}}) {
    const double reference = genfunc_coeffs_infinite(run.m, run.k).coeffs[run.k];
    const McEstimate est = mc_harmonic_infinite(run.m, run.k, run.n, options.seed, mc);
    const std::string tag = label("[m=", run.m, ",k=", run.k, ",n=", run.n, "]");
    out.push_back(within_sigma("integral.mc" + tag,
                               std::fabs(est.mean.real() - reference), est.std_err));
    out.push_back(within_sigma("integral.mc_imag" + tag, std::fabs(est.mean.imag()),
                               est.std_err_im));
    if (run.m == 2) {
      out.push_back(within_sigma("integral.route_agreement_quad_mc" + tag,
                                 std::fabs(est.mean.real() - quad_m2(run.k)),
                                 est.std_err + 2.5e-11));
    }
  }

  const std::vector<std::vector<double>> alpha_sets = {{1.0, 1.0, 1.0}, {2.0, 3.0},
                                                       {2.0, 2.0, 2.0}};
  for (const auto& alphas : alpha_sets) {
    const McEstimate est = multibeta_check(alphas, 1'000'000, options.seed, mc);
    std::ostringstream tag;
    for (std::size_t i = 0; i < alphas.size(); ++i) tag << (i ? "," : "") << alphas[i];
    out.push_back(within_sigma(label("integral.multibeta[", tag.str(), "]"),
                               std::fabs(est.mean.real() - multibeta(alphas)), est.std_err));
  }
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "exact") return Suite::Exact;
  if (name == "series") return Suite::Series;
  if (name == "gamma") return Suite::Gamma;
  if (name == "integral") return Suite::Integral;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

std::vector<Check> run_suite(Suite suite, const SuiteOptions& options) {
  std::vector<Check> checks;
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Exact) exact_suite(checks);
  if (all || suite == Suite::Series) series_suite(checks);
  if (all || suite == Suite::Gamma) gamma_suite(checks);
  if (all || suite == Suite::Integral) integral_suite(checks, options);
  return checks;
}

}  // namespace epiihs::verify
