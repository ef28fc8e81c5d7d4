#include <doctest.h>

#include <cmath>
#include <random>

#include "extset/constructions.hpp"
#include "extset/exact.hpp"
#include "extset/invariants.hpp"
#include "oracles.hpp"

using namespace extset;
using exact::BigInt;
using exact::BigRat;

namespace {

BigInt big(const oracle::Big& x) { return BigInt(x); }

// Telescoping product of (n-k+1-i)/(n-t-i) for i = 1..k, one factor at a time.
BigRat product_oracle(int n, int k, int t) {
  BigRat r = 1;
  for (int i = 1; i <= k; ++i) r *= BigRat(n - k + 1 - i, n - t - i);
  return r;
}

}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("binom conventions and factorial oracle") {
    CHECK(exact::binom(5, 2) == 10);
    CHECK(exact::binom(4, 7) == 0);
    CHECK(exact::binom(52, 5) == 2598960);
    CHECK(exact::binom(-1, 0) == 0);
    CHECK(exact::binom(3, -1) == 0);
    CHECK(exact::binom(0, 0) == 1);
    for (int a = 0; a <= 120; a += 7) {
      for (int b = -2; b <= a + 2; ++b) CHECK(exact::binom(a, b) == big(oracle::binom(a, b)));
    }
  }

  TEST_CASE("property: Pascal's rule for 0 <= b <= a <= 100") {
    for (int a = 1; a <= 100; ++a) {
      for (int b = 0; b <= a; ++b) {
        REQUIRE(exact::binom(a, b) == exact::binom(a - 1, b - 1) + exact::binom(a - 1, b));
      }
    }
  }

  TEST_CASE("rational helpers") {
    const BigRat r = exact::ratio(6, 4);
    CHECK(numerator(r) == 3);
    CHECK(denominator(r) == 2);
    CHECK(exact::ratio(-3, -6) == BigRat(1, 2));
    CHECK(denominator(exact::ratio(3, -6)) > 0);
    CHECK_THROWS(exact::ratio(1, 0));
    CHECK(exact::floor(BigRat(-7, 2)) == -4);
    CHECK(exact::floor(BigRat(7, 2)) == 3);
    CHECK(exact::pow(BigRat(2, 5), 3) == BigRat(8, 125));
    CHECK(exact::to_string(BigRat(-1, 3)) == "-1/3");
    CHECK(exact::to_string(BigRat(4)) == "4");
  }

  TEST_CASE("kz_bound") {
    CHECK(exact::kz_bound(10, 4, 3) == 70);
    CHECK(exact::kz_bound(9, 4, 4) == 53);
    CHECK(exact::kz_bound(9, 4, 4) == static_cast<long long>(hilton_milner(9, 4, 4).size()));
    for (int k = 3; k <= 8; ++k) {
      for (int n = 2 * k + 1; n <= 40; ++n) {
        CHECK(exact::kz_bound(n, k, k) == big(oracle::binom(n - 1, k - 1) - oracle::binom(n - k - 1, k - 1) + 1));
        CHECK(BigRat(exact::kz_bound(n, k, 3)) == exact::eq25_chain(n, k).lhs);
      }
    }
    CHECK_THROWS_AS(exact::kz_bound(8, 4, 3), ParameterError);
    CHECK_THROWS_AS(exact::kz_bound(12, 4, 2), ParameterError);
    CHECK_THROWS_AS(exact::kz_bound(12, 4, 5), ParameterError);
  }

  TEST_CASE("kz_bound_real tracks the exact bound at integer u") {
    for (int k = 3; k <= 7; ++k) {
      for (int n = 2 * k + 1; n <= 25; ++n) {
        for (int u = 3; u <= k; ++u) {
          const double exact_v = static_cast<double>(exact::kz_bound(n, k, u));
          CHECK(exact::kz_bound_real(n, k, u) == doctest::Approx(exact_v).epsilon(1e-9));
        }
      }
    }
    const double mid = exact::kz_bound_real(20, 6, 4.5);
    const double lo = static_cast<double>(exact::kz_bound(20, 6, 4));
    const double hi = static_cast<double>(exact::kz_bound(20, 6, 5));
    CHECK(mid >= std::min(lo, hi));
    CHECK(mid <= std::max(lo, hi));
  }

  TEST_CASE("hm_t_degree_bound") {
    CHECK(exact::hm_t_degree_bound(9, 4, 1) == 18);
    CHECK(exact::hm_t_degree_bound(12, 4, 2) == 4);
    for (int k = 2; k <= 6; ++k) CHECK(exact::hm_t_degree_bound(2 * k + 3, k, k - 1) == 0);
    const Family h = hilton_milner(12, 4, 4);
    CHECK(oracle::min_t_degree(12, 2, h.masks()) == 4);
    CHECK(oracle::min_t_degree(9, 1, hilton_milner(9, 4, 4).masks()) == 18);
    CHECK_THROWS_AS(exact::hm_t_degree_bound(8, 4, 1), ParameterError);
    CHECK_THROWS_AS(exact::hm_t_degree_bound(9, 4, 4), ParameterError);
  }

  TEST_CASE("a0_t_degree") {
    CHECK(exact::a0_t_degree(8, 3, 2, 1) == 11);
    CHECK(exact::a0_t_degree(8, 3, 6, 2) == exact::binom(6, 1));
    CHECK(exact::a0_t_degree(10, 3, 1, 1) == 8);
    CHECK(exact::a0_t_degree(10, 3, 1, 1) == exact::binom(8, 1));
    CHECK_THROWS_AS(exact::a0_t_degree(8, 3, 0, 1), ParameterError);
    CHECK_THROWS_AS(exact::a0_t_degree(8, 3, 2, 4), ParameterError);
  }

  TEST_CASE("emc_size_bound") {
    CHECK(exact::emc_ground_size(3, 2, 3) == 13);
    const auto b1 = exact::emc_size_bound(13, 3, 2, 3);
    CHECK(b1.value == 121);
    CHECK(b1.floor == 121);
    CHECK(exact::emc_ground_size(3, 2, 9) == 25);
    const auto b2 = exact::emc_size_bound(25, 3, 2, 9);
    CHECK(b2.value == BigRat(2300 - 1771) - BigRat(380, 3));
    CHECK(b2.floor == 402);
    for (int s = 2; s <= 4; ++s) {
      for (int k = 2; k <= 5; ++k) {
        const int n = exact::emc_ground_size(k, s, s + 1);
        CHECK(exact::emc_size_bound(n, k, s, s + 1).value == BigRat(exact::binom(n, k) - exact::binom(n - s, k)));
      }
    }
    CHECK_THROWS_AS(exact::emc_size_bound(14, 3, 2, 3), ParameterError);
    CHECK_THROWS_AS(exact::emc_size_bound(13, 3, 2, 2), ParameterError);
  }

  TEST_CASE("eq25 chain") {
    const auto o = exact::eq25_chain(10, 4);
    CHECK(o.holds);
    CHECK(o.lhs == 70);
    CHECK(o.rhs == 70);
    CHECK(exact::eq25_chain(7, 3).lhs == 13);
    for (int k = 3; k <= 10; ++k) CHECK(exact::check_eq25(2 * k + 2, k));
    CHECK_THROWS_AS(exact::eq25_chain(5, 3), ParameterError);
  }

  TEST_CASE("eq04 ratio bound") {
    CHECK(exact::check_eq04(12, 4, 3));
    for (int k = 3; k <= 8; ++k) CHECK(exact::check_eq04(2 * k + 2, k, k));
    for (int k = 3; k <= 8; ++k) {
      for (int n = 2 * k + 2; n <= 30; ++n) {
        for (int u = 3; u <= k; ++u) {
          const auto o = exact::eq04_chain(n, k, u);
          CHECK((o.holds || o.skipped));
          if (!o.skipped) {
            const BigRat lhs(big(oracle::binom(n - u - 1, n - k - 1)), big(oracle::binom(n - u - 1, k - 1)));
            CHECK(o.lhs == lhs);
          }
        }
      }
    }
    CHECK_THROWS_AS(exact::eq04_chain(9, 4, 3), ParameterError);
  }

  TEST_CASE("eq07 product identity") {
    const auto o = exact::eq07_identity(12, 4, 1);
    CHECK(o.holds);
    CHECK(o.lhs == BigRat(1, 3));
    CHECK(o.rhs == BigRat(1, 3));
    for (int k = 2; k <= 6; ++k) {
      for (int t = 1; t < k; ++t) {
        CHECK(exact::check_eq07(2 * k + 1, k, t));
        for (int n = 2 * k + 1; n <= 30; ++n) {
          CHECK(exact::hm_product(n, k, t) == product_oracle(n, k, t));
          CHECK(exact::check_eq07(n, k, t));
        }
      }
    }
    CHECK_THROWS_AS(exact::eq07_identity(8, 4, 1), ParameterError);
  }

  TEST_CASE("alpha closed form agrees with direct counts") {
    for (int k = 2; k <= 5; ++k) {
      for (int n = 2 * k + 1; n <= 12; ++n) {
        for (int t = 1; t < k; ++t) {
          CHECK(exact::alpha_closed_form(n, k, t) == exact::alpha_count(star(n, k, 1), t));
        }
      }
    }
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
      const int k = 2 + static_cast<int>(rng() % 3);
      const int n = 2 * k + 1 + static_cast<int>(rng() % 3);
      const int t = 1 + static_cast<int>(rng() % (k - 1));
      const auto masks = oracle::random_family(n, k, 0.4, rng);
      const Mask tail = oracle::layer(n, n)[0] & ~((Mask{1} << (k + 1)) - 1);
      long long expect = 0;
      for (Mask m : masks) expect += (m & 1U) && std::popcount(m & tail) <= t - 1;
      CHECK(exact::alpha_count(Family::from_masks(n, k, masks), t) == expect);
    }
  }
}
