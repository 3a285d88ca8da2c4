// Copyright 2026 The epiihs Authors
// SPDX-License-Identifier: Apache-2.0

#include "epiihs/epiihs.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "epiihs/error.hpp"
#include "epiihs/exact_core.hpp"
#include "epiihs/quadrature.hpp"
#include "epiihs/series_engine.hpp"
#include "epiihs/special_fn.hpp"
#include "epiihs/verify.hpp"

struct epiihs_rational {
  epiihs::BigRational value;
};

struct epiihs_check_list {
  std::vector<epiihs::verify::Check> checks;
};

namespace {

thread_local std::string last_error;

epiihs_status to_status(epiihs::ErrorCode code) {
  using epiihs::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return EPIIHS_ERR_INVALID_ARGUMENT;
    case ErrorCode::EnumerationTooLarge: return EPIIHS_ERR_ENUMERATION_TOO_LARGE;
    case ErrorCode::Pole: return EPIIHS_ERR_POLE;
    case ErrorCode::Domain: return EPIIHS_ERR_DOMAIN;
    case ErrorCode::DivisionByZero: return EPIIHS_ERR_DIVISION_BY_ZERO;
    case ErrorCode::Config: return EPIIHS_ERR_CONFIG;
  }
  return EPIIHS_ERR_INTERNAL;
}

epiihs_status fail(epiihs_status status, const char* message) {
  last_error = message;
  return status;
}

template <typename Fn>
epiihs_status guarded(Fn&& fn) {
  try {
    fn();
    return EPIIHS_OK;
  } catch (const epiihs::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(EPIIHS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(EPIIHS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(EPIIHS_ERR_INTERNAL, "unknown exception");
  }
}

epiihs::ComplexValue from_c(epiihs_complex z) { return {z.re, z.im}; }
epiihs_complex to_c(epiihs::ComplexValue z) { return {z.real(), z.imag()}; }

epiihs_mc_estimate to_c(const epiihs::McEstimate& e) {
  return {to_c(e.mean), e.std_err, e.std_err_im, e.n_samples, e.seed, e.rejected};
}

#define EPIIHS_REQUIRE(ptr)                                              \
  do {                                                                   \
    if ((ptr) == nullptr) {                                              \
      return fail(EPIIHS_ERR_INVALID_ARGUMENT, #ptr " must not be NULL"); \
    }                                                                    \
  } while (0)

}  // namespace

extern "C" {

const char* epiihs_version(void) { return "0.1.0"; }

const char* epiihs_status_string(epiihs_status status) {
  switch (status) {
    case EPIIHS_OK: return "ok";
    case EPIIHS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case EPIIHS_ERR_ENUMERATION_TOO_LARGE: return "enumeration too large";
    case EPIIHS_ERR_POLE: return "pole";
    case EPIIHS_ERR_DOMAIN: return "domain error";
    case EPIIHS_ERR_DIVISION_BY_ZERO: return "division by zero";
    case EPIIHS_ERR_CONFIG: return "configuration error";
    case EPIIHS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* epiihs_last_error(void) { return last_error.c_str(); }

epiihs_status epiihs_rational_parse(const char* text, epiihs_rational** out) {
  EPIIHS_REQUIRE(text);
  EPIIHS_REQUIRE(out);
  return guarded([&] { *out = new epiihs_rational{epiihs::BigRational::parse(text)}; });
}

void epiihs_rational_free(epiihs_rational* q) { delete q; }

size_t epiihs_rational_to_string(const epiihs_rational* q, char* buffer, size_t capacity) {
  if (q == nullptr) return 0;
  const std::string text = q->value.to_string();
  if (buffer != nullptr && capacity > text.size()) {
    std::memcpy(buffer, text.c_str(), text.size() + 1);
  }
  return text.size();
}

double epiihs_rational_to_double(const epiihs_rational* q) {
  return q == nullptr ? 0.0 : q->value.to_double();
}

int epiihs_rational_equal(const epiihs_rational* lhs, const epiihs_rational* rhs) {
  if (lhs == nullptr || rhs == nullptr) return lhs == rhs;
  return lhs->value == rhs->value ? 1 : 0;
}

epiihs_status epiihs_harmonic_sum(unsigned a, unsigned k, uint64_t n,
                                  epiihs_sum_method method, epiihs_rational** out) {
  EPIIHS_REQUIRE(out);
  return guarded([&] {
    const epiihs::HarmonicSpec spec(a, k, epiihs::Cutoff::finite(n));
    epiihs::BigRational value;
    switch (method) {
      case EPIIHS_SUM_BRUTE: value = epiihs::brute_force_sum(spec); break;
      case EPIIHS_SUM_RECURRENCE: value = epiihs::harmonic_sum_exact(spec); break;
      case EPIIHS_SUM_PARTITION: value = epiihs::partition_sum(spec); break;
      case EPIIHS_SUM_SERIES:
        value = epiihs::genfunc_coeffs_finite(a, n, k).coeffs[k];
        break;
      default: throw epiihs::InvalidArgumentError("unknown summation method");
    }
    *out = new epiihs_rational{std::move(value)};
  });
}

epiihs_status epiihs_harmonic_sum_infinite(unsigned a, unsigned k, double* out) {
  EPIIHS_REQUIRE(out);
  return guarded([&] {
    const epiihs::HarmonicSpec spec(a, k, epiihs::Cutoff::infinity());
    *out = k == 0 ? 1.0 : epiihs::genfunc_coeffs_infinite(spec.a(), k).coeffs[k];
  });
}

epiihs_status epiihs_qseries_coefficient(uint64_t n, uint64_t m, const epiihs_rational* t,
                                         unsigned a, epiihs_rational** out) {
  EPIIHS_REQUIRE(t);
  EPIIHS_REQUIRE(out);
  return guarded([&] {
    *out = new epiihs_rational{epiihs::qseries_coefficient(n, m, t->value, a)};
  });
}

epiihs_status epiihs_partition_weight_sum(uint64_t n, uint64_t m, const epiihs_rational* t,
                                          unsigned a, epiihs_rational** out) {
  EPIIHS_REQUIRE(t);
  EPIIHS_REQUIRE(out);
  return guarded([&] {
    *out = new epiihs_rational{epiihs::partition_weight_sum(n, m, t->value, a)};
  });
}

epiihs_status epiihs_genfunc_series(unsigned m, double t, unsigned order, double* value,
                                    double* tail_bound) {
  EPIIHS_REQUIRE(value);
  return guarded([&] {
    const double bound = epiihs::series_tail_bound(m, t, order);
    *value = epiihs::evaluate(epiihs::genfunc_coeffs_infinite(m, order), t);
    if (tail_bound != nullptr) *tail_bound = bound;
  });
}

epiihs_status epiihs_gamma(epiihs_complex z, epiihs_complex* out) {
  EPIIHS_REQUIRE(out);
  return guarded([&] { *out = to_c(epiihs::gamma_complex(from_c(z))); });
}

epiihs_status epiihs_gamma_product(unsigned m, double t, epiihs_complex* out) {
  EPIIHS_REQUIRE(out);
  return guarded([&] { *out = to_c(epiihs::gamma_product(m, t)); });
}

epiihs_status epiihs_finite_product(double a, uint64_t n, double t, double* out) {
  EPIIHS_REQUIRE(out);
  return guarded([&] { *out = epiihs::finite_product(a, n, t); });
}

epiihs_status epiihs_beta(epiihs_complex x, epiihs_complex y, epiihs_complex* out) {
  EPIIHS_REQUIRE(out);
  return guarded([&] { *out = to_c(epiihs::beta(from_c(x), from_c(y))); });
}

epiihs_status epiihs_beta_limit(epiihs_complex z, uint64_t n, epiihs_complex* out) {
  EPIIHS_REQUIRE(out);
  return guarded([&] { *out = to_c(epiihs::beta_limit(from_c(z), n)); });
}

epiihs_status epiihs_multibeta(const double* alphas, size_t count, double* out) {
  EPIIHS_REQUIRE(alphas);
  EPIIHS_REQUIRE(out);
  return guarded([&] { *out = epiihs::multibeta({alphas, count}); });
}

epiihs_status epiihs_zeta(unsigned s, double* out) {
  EPIIHS_REQUIRE(out);
  return guarded([&] { *out = epiihs::zeta_ref(s); });
}

epiihs_status epiihs_quad_m2(unsigned k, double truncation, unsigned levels,
                             epiihs_quad_result* out) {
  EPIIHS_REQUIRE(out);
  return guarded([&] {
    const epiihs::Quad1DConfig config{truncation, levels};
    const epiihs::Quad1DResult r = epiihs::quad_m2_detailed(k, config);
    *out = {r.value, r.error_estimate, epiihs::quad_m2_tail_bound(k, truncation),
            r.evaluations};
  });
}

epiihs_status epiihs_mc_harmonic(unsigned m, unsigned k, uint64_t n_samples, uint64_t seed,
                                 unsigned threads, epiihs_mc_estimate* out) {
  EPIIHS_REQUIRE(out);
  return guarded([&] {
    *out = to_c(epiihs::mc_harmonic_infinite(m, k, n_samples, seed, {threads}));
  });
}

epiihs_status epiihs_multibeta_check(const double* alphas, size_t count,
                                     uint64_t n_samples, uint64_t seed, unsigned threads,
                                     epiihs_mc_estimate* out) {
  EPIIHS_REQUIRE(alphas);
  EPIIHS_REQUIRE(out);
  return guarded([&] {
    *out = to_c(epiihs::multibeta_check({alphas, count}, n_samples, seed, {threads}));
  });
}

epiihs_status epiihs_verify(const char* suite, uint64_t seed, unsigned threads,
                            epiihs_check_list** out) {
  EPIIHS_REQUIRE(suite);
  EPIIHS_REQUIRE(out);
  return guarded([&] {
    const auto parsed = epiihs::verify::parse_suite(suite);
    if (!parsed) {
      throw epiihs::InvalidArgumentError(std::string("unknown suite '") + suite + "'");
    }
    *out = new epiihs_check_list{epiihs::verify::run_suite(*parsed, {seed, threads})};
  });
}

size_t epiihs_check_list_size(const epiihs_check_list* list) {
  return list == nullptr ? 0 : list->checks.size();
}

epiihs_status epiihs_check_list_get(const epiihs_check_list* list, size_t index,
                                    epiihs_check* out) {
  EPIIHS_REQUIRE(list);
  EPIIHS_REQUIRE(out);
  if (index >= list->checks.size()) {
    return fail(EPIIHS_ERR_INVALID_ARGUMENT, "check index out of range");
  }
  const auto& c = list->checks[index];
  *out = {c.name.c_str(), c.passed ? 1 : 0, c.measured, c.tolerance};
  return EPIIHS_OK;
}

void epiihs_check_list_free(epiihs_check_list* list) { delete list; }

}  // extern "C"
