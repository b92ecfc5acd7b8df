#include <doctest.h>

#include <stdexcept>

#include "diskflow/combinat.hpp"
#include "oracles.hpp"

using namespace diskflow;

TEST_CASE("catalan matches factorial formula and Dyck words") {
  for (int m = 0; m <= 60; ++m) CHECK(catalan(m) == oracle::catalan_factorial(static_cast<unsigned>(m)));
  for (int m = 0; m <= 12; ++m) CHECK(catalan(m) == oracle::dyck_words(m));
  CHECK(catalan(6) == 132);
  CHECK_THROWS_AS(catalan(-1), std::invalid_argument);
}

TEST_CASE("catalan convolution") {
  for (int n = 1; n <= 60; ++n) {
    BigInt sum = 0;
    for (int i = 0; i <= n; ++i) sum += catalan(i) * catalan(n - i);
    CHECK(sum == catalan(n + 1));
  }
}

TEST_CASE("t_count small values") {
  const long expected[] = {1, 4, 27, 216, 1890, 17496, 168399};
  for (int k = 1; k <= 7; ++k) CHECK(t_count(2 * k) == expected[k - 1]);
  CHECK(t_count(16) == 1667952);
  CHECK_THROWS_AS(t_count(7), std::invalid_argument);
  CHECK_THROWS_AS(t_count(0), std::invalid_argument);
}

TEST_CASE("alpha small values") {
  CHECK(alpha(2) == 1);
  CHECK(alpha(4) == 3);
  CHECK(alpha(6) == 18);
  // 3^(n/2-1) C_(n/2-1) from the factorial oracle.
  for (int n = 2; n <= 60; n += 2) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(n / 2 - 1));
    CHECK(alpha(n) == p * oracle::catalan_factorial(static_cast<unsigned>(n / 2 - 1)));
  }
}

TEST_CASE("catalan triple sum") {
  CHECK(catalan_triple_sum(1) == 1);
  CHECK(catalan_triple_sum(3) == 9);  // 1+1+1+2+2+2
  CHECK(catalan_triple_sum(3) == catalan(4) - catalan(3));
  CHECK(catalan_triple_sum(5) == 90);
  for (int n = 1; n <= 60; ++n) CHECK(catalan_triple_sum(n) == catalan(n + 1) - catalan(n));
}

TEST_CASE("alpha and T recurrences") {
  for (int n = 4; n <= 60; n += 2) {
    CHECK(alpha_recurrence_check(n));
    CHECK(t_recurrence_check(n));
  }
}

TEST_CASE("a275607 closed form") {
  CHECK(a275607(1) == 4);
  CHECK(a275607(2) == 27);
  CHECK(a275607(6) == 168399);
  for (int n = 1; n <= 30; ++n) CHECK(a275607(n) == t_count(2 * n + 2));
}

TEST_CASE("series coefficients") {
  const auto coeffs = series_coeffs(30);
  REQUIRE(coeffs.size() == 31);
  CHECK(coeffs[0] == BigRational(1, 9));
  CHECK(coeffs[2] == 4);
  CHECK(coeffs[6] == 17496);
  const auto reference = oracle::t_series_by_squaring(30);
  for (int k = 0; k <= 30; ++k) CHECK(coeffs[static_cast<size_t>(k)] == reference[static_cast<size_t>(k)]);
  for (int k = 1; k <= 30; ++k) {
    CHECK(coeffs[static_cast<size_t>(k)].get_den() == 1);
    CHECK(coeffs[static_cast<size_t>(k)] == BigRational(t_count(2 * k)));
  }
  CHECK(series_coeffs(0).size() == 1);
}

TEST_CASE("repeated evaluation is stable") {
  const BigInt first = t_count(40);
  CHECK(t_count(40) == first);
  CHECK(series_coeffs(10) == series_coeffs(10));
}
