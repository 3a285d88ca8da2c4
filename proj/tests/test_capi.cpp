// Copyright 2026 The epiihs Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstring>
#include <string>

#include "doctest.h"
#include "epiihs/epiihs.h"

namespace {

std::string text_of(const epiihs_rational* q) {
  char buffer[256];
  const size_t n = epiihs_rational_to_string(q, buffer, sizeof buffer);
  REQUIRE(n < sizeof buffer);
  return buffer;
}

}  // namespace

TEST_CASE("rational handles") {
  epiihs_rational* q = nullptr;
  REQUIRE(epiihs_rational_parse("6/8", &q) == EPIIHS_OK);
  CHECK(text_of(q) == "3/4");
  CHECK(epiihs_rational_to_double(q) == 0.75);

  char tiny[3];
  std::memset(tiny, 'x', sizeof tiny);
  CHECK(epiihs_rational_to_string(q, tiny, sizeof tiny) == 3);
  CHECK(tiny[0] == 'x');  // untouched when the buffer is too small
  epiihs_rational_free(q);

  CHECK(epiihs_rational_parse("1/0", &q) == EPIIHS_ERR_DIVISION_BY_ZERO);
  CHECK(epiihs_rational_parse("abc", &q) == EPIIHS_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(epiihs_last_error()) > 0);
  epiihs_rational_free(nullptr);
}

TEST_CASE("all four summation methods agree") {
  for (unsigned a = 1; a <= 3; ++a) {
    for (unsigned k = 0; k <= 3; ++k) {
      for (uint64_t n = 1; n <= 6; ++n) {
        epiihs_rational* results[4] = {};
        for (int m = 0; m < 4; ++m) {
          REQUIRE(epiihs_harmonic_sum(a, k, n, static_cast<epiihs_sum_method>(m),
                                      &results[m]) == EPIIHS_OK);
        }
        for (int m = 1; m < 4; ++m) CHECK(epiihs_rational_equal(results[0], results[m]));
        for (auto* r : results) epiihs_rational_free(r);
      }
    }
  }
  epiihs_rational* q = nullptr;
  REQUIRE(epiihs_harmonic_sum(2, 2, 2, EPIIHS_SUM_BRUTE, &q) == EPIIHS_OK);
  CHECK(text_of(q) == "21/16");
  epiihs_rational_free(q);
}

TEST_CASE("status codes") {
  epiihs_rational* q = nullptr;
  CHECK(epiihs_harmonic_sum(2, 4, 100, EPIIHS_SUM_BRUTE, &q) ==
        EPIIHS_ERR_ENUMERATION_TOO_LARGE);
  CHECK(epiihs_harmonic_sum(0, 1, 3, EPIIHS_SUM_RECURRENCE, &q) == EPIIHS_ERR_INVALID_ARGUMENT);
  CHECK(epiihs_harmonic_sum(1, 1, 3, EPIIHS_SUM_RECURRENCE, nullptr) ==
        EPIIHS_ERR_INVALID_ARGUMENT);
  CHECK(std::string(epiihs_last_error()).find("NULL") != std::string::npos);

  double x = 0.0;
  CHECK(epiihs_harmonic_sum_infinite(1, 1, &x) == EPIIHS_ERR_INVALID_ARGUMENT);
  REQUIRE(epiihs_harmonic_sum_infinite(1, 0, &x) == EPIIHS_OK);
  CHECK(x == 1.0);

  epiihs_complex z{};
  CHECK(epiihs_gamma({-2.0, 0.0}, &z) == EPIIHS_ERR_POLE);
  CHECK(epiihs_gamma_product(2, 1.0, &z) == EPIIHS_ERR_INVALID_ARGUMENT);
  CHECK(epiihs_quad_m2(1, 5.0, 8, nullptr) == EPIIHS_ERR_INVALID_ARGUMENT);
  epiihs_quad_result qr{};
  CHECK(epiihs_quad_m2(1, 5.0, 8, &qr) == EPIIHS_ERR_CONFIG);
  CHECK(std::string(epiihs_status_string(EPIIHS_ERR_POLE)) == "pole");
}

TEST_CASE("numeric entry points") {
  double value = 0.0;
  REQUIRE(epiihs_harmonic_sum_infinite(2, 1, &value) == EPIIHS_OK);
  CHECK(std::fabs(value - 1.6449340668482264) < 1e-15);

  epiihs_complex g{};
  REQUIRE(epiihs_gamma_product(2, 0.5, &g) == EPIIHS_OK);
  CHECK(std::fabs(g.re - M_PI / 2) < 1e-12);

  double bound = 0.0;
  REQUIRE(epiihs_genfunc_series(3, 0.5, 32, &value, &bound) == EPIIHS_OK);
  REQUIRE(epiihs_gamma_product(3, 0.5, &g) == EPIIHS_OK);
  CHECK(std::fabs(value - g.re) <= bound + 1e-10);

  epiihs_quad_result qr{};
  REQUIRE(epiihs_quad_m2(1, 80.0, 8, &qr) == EPIIHS_OK);
  CHECK(std::fabs(qr.value - 1.6449340668482264) < 1e-10);
  CHECK(qr.tail_bound < 1e-14);

  const double alphas[] = {2.0, 3.0};
  REQUIRE(epiihs_multibeta(alphas, 2, &value) == EPIIHS_OK);
  CHECK(value == doctest::Approx(1.0 / 12.0));

  epiihs_mc_estimate a{}, b{};
  REQUIRE(epiihs_mc_harmonic(2, 1, 100000, 42, 1, &a) == EPIIHS_OK);
  REQUIRE(epiihs_mc_harmonic(2, 1, 100000, 42, 3, &b) == EPIIHS_OK);
  CHECK(a.mean.re == b.mean.re);
  CHECK(a.std_err == b.std_err);
  CHECK(a.seed == 42);

  epiihs_rational* t = nullptr;
  epiihs_rational* lhs = nullptr;
  epiihs_rational* rhs = nullptr;
  REQUIRE(epiihs_rational_parse("2/3", &t) == EPIIHS_OK);
  REQUIRE(epiihs_qseries_coefficient(4, 9, t, 2, &lhs) == EPIIHS_OK);
  REQUIRE(epiihs_partition_weight_sum(4, 9, t, 2, &rhs) == EPIIHS_OK);
  CHECK(epiihs_rational_equal(lhs, rhs));
  epiihs_rational_free(t);
  epiihs_rational_free(lhs);
  epiihs_rational_free(rhs);
}

TEST_CASE("verification check lists") {
  epiihs_check_list* list = nullptr;
  CHECK(epiihs_verify("nope", 42, 0, &list) == EPIIHS_ERR_INVALID_ARGUMENT);
  REQUIRE(epiihs_verify("exact", 42, 0, &list) == EPIIHS_OK);
  const size_t n = epiihs_check_list_size(list);
  CHECK(n > 0);
  for (size_t i = 0; i < n; ++i) {
    epiihs_check c{};
    REQUIRE(epiihs_check_list_get(list, i, &c) == EPIIHS_OK);
    CHECK(c.passed == 1);
    CHECK(std::strncmp(c.name, "exact.", 6) == 0);
  }
  epiihs_check c{};
  CHECK(epiihs_check_list_get(list, n, &c) == EPIIHS_ERR_INVALID_ARGUMENT);
  epiihs_check_list_free(list);
}
