#include <doctest.h>

#include <set>

#include "extset/claims.hpp"
#include "oracles.hpp"

using namespace extset;
using namespace extset::exact;

namespace {

using Rat = boost::multiprecision::cpp_rational;

ParamPoint pt(std::optional<int> n, std::optional<int> k, std::optional<int> t = {}, std::optional<int> s = {},
              std::optional<int> u = {}) {
  ParamPoint p;
  p.n = n;
  p.k = k;
  p.t = t;
  p.s = s;
  p.u = u;
  return p;
}

bool eq19_oracle(int n, int k, int t) {
  using oracle::binom;
  return binom(n - k - 2, k - 2) >= binom(k, t) * (binom(n - k - 1, t) + binom(n - k + t + 1, t + 2));
}

bool eq09_oracle(int n, int k) {
  Rat prod = 1;
  for (int i = 2; i <= k; ++i) prod *= Rat(n - k + 1 - i, n - 1 - i);
  return Rat(n - 2 * k - 2, n) >= prod;
}

bool eq151_oracle(int n, int k, int t) { return Rat(k, k - t) <= Rat(n - k - 2, k - 2); }

bool eq05_oracle(int n, int k, int t) {
  return Rat(k * (k - 1) * (3 * n - 2 * k - 2), n * (n - 1) * (n - 2)) <= Rat(k - t, n - t);
}

}  // namespace

TEST_SUITE("claims") {
  TEST_CASE("table covers every claim id once") {
    const auto& table = claim_table();
    CHECK(table.size() == 18);
    std::set<int> ids;
    for (const auto& info : table) {
      ids.insert(static_cast<int>(info.id));
      CHECK(claim_info(info.id).name == info.name);
      CHECK(parse_claim_id(info.name) == info.id);
      CHECK(parse_claim_id(info.alias) == info.id);
    }
    CHECK(ids.size() == table.size());
    CHECK(parse_claim_id("eq07") == ClaimId::EQ07_IDENTITY);
    CHECK(parse_claim_id("EQ34") == ClaimId::EQ33_35_PRED);
    CHECK_THROWS_AS(parse_claim_id("EQ99"), ParameterError);
  }

  TEST_CASE("every claim evaluates at a representative point") {
    const std::vector<std::pair<ClaimId, ParamPoint>> points = {
        {ClaimId::EQ25_IDENTITY, pt(10, 4)},
        {ClaimId::EQ04_BOUND, pt(12, 4, {}, {}, 3)},
        {ClaimId::EQ07_IDENTITY, pt(12, 4, 1)},
        {ClaimId::EQ01_BOUND, pt(11, 4, {}, {}, 3)},
        {ClaimId::EQ02_PRED, pt(11, 4, 2)},
        {ClaimId::EQ151_PRED, pt(20, 5, 1)},
        {ClaimId::EQ05_PRED, pt(20, 5, 1)},
        {ClaimId::EQ19_PRED, pt(65, 30, 1)},
        {ClaimId::EQ16_PRED, pt(40, 10, 2)},
        {ClaimId::EQ13_PRED, pt(40, 10, 1, {}, 3)},
        {ClaimId::EQ10_PRED, pt(60, 12, 1)},
        {ClaimId::EQ11_PRED, pt(40, 10, 2)},
        {ClaimId::EQ09_PRED, pt(28, 12)},
        {ClaimId::EQ33_35_PRED, pt(60, 4, 1, 2)},
        {ClaimId::EQHIL_BOUND, pt({}, 3, {}, 2, 9)},
        {ClaimId::KZ_EQUALS_HM_AT_U_EQ_K, pt(11, 5)},
        {ClaimId::A0_TDEGREE_FORM, pt(8, 3, 1, 2)},
        {ClaimId::HM_TDEGREE_FORM, pt(9, 4, 1)},
    };
    CHECK(points.size() == claim_table().size());
    for (const auto& [id, p] : points) {
      CAPTURE(claim_info(id).name);
      const ClaimRecord rec = evaluate_claim(id, p);
      CHECK(rec.claim == id);
      if (claim_info(id).kind == ClaimKind::Identity) CHECK(rec.outcome.holds);
    }
  }

  TEST_CASE("points outside a regime are rejected") {
    CHECK_THROWS_AS(evaluate_claim(ClaimId::EQ07_IDENTITY, pt(8, 4, 1)), ParameterError);
    CHECK_THROWS_AS(evaluate_claim(ClaimId::EQ07_IDENTITY, pt(12, 4, 4)), ParameterError);
    CHECK_THROWS_AS(evaluate_claim(ClaimId::EQ07_IDENTITY, pt(12, 4)), ParameterError);
    CHECK_THROWS_AS(evaluate_claim(ClaimId::A0_TDEGREE_FORM, pt(30, 3, 1, 2)), ParameterError);
    CHECK_THROWS_AS(check_case_predicates(pt(8, 4), ClaimId::EQ09_PRED), ParameterError);
  }

  TEST_CASE("published threshold points") {
    CHECK(check_case_predicates(pt(65, 30, 1), ClaimId::EQ19_PRED));
    CHECK(check_case_predicates(pt(36, 15, 1), ClaimId::EQ19_PRED));
    CHECK(check_case_predicates(pt(28, 12), ClaimId::EQ09_PRED));
  }

  TEST_CASE("predicates agree with independent rational oracles") {
    for (int k = 3; k <= 40; ++k) {
      for (int n = 2 * k + 1; n <= 2 * k + 12; ++n) {
        CHECK(check_case_predicates(pt(n, k), ClaimId::EQ09_PRED) == eq09_oracle(n, k));
        for (int t = 1; t < k; ++t) {
          CHECK(check_case_predicates(pt(n, k, t), ClaimId::EQ19_PRED) == eq19_oracle(n, k, t));
          CHECK(check_case_predicates(pt(n, k, t), ClaimId::EQ151_PRED) == eq151_oracle(n, k, t));
          CHECK(check_case_predicates(pt(n, k, t), ClaimId::EQ05_PRED) == eq05_oracle(n, k, t));
        }
      }
    }
  }

  TEST_CASE("identity claims hold on their grids") {
    for (int k = 3; k <= 8; ++k) {
      for (int n = 2 * k + 1; n <= 40; ++n) {
        CHECK(evaluate_claim(ClaimId::KZ_EQUALS_HM_AT_U_EQ_K, pt(n, k)).outcome.holds);
        for (int t = 1; t < k; ++t) CHECK(evaluate_claim(ClaimId::EQ02_PRED, pt(n, k, t)).outcome.holds);
      }
    }
    for (int k = 2; k <= 5; ++k) {
      for (int n = 2 * k + 1; n <= 13; ++n) {
        for (int t = 1; t < k; ++t) CHECK(evaluate_claim(ClaimId::HM_TDEGREE_FORM, pt(n, k, t)).outcome.holds);
        for (int u = 3; u <= k; ++u) CHECK(evaluate_claim(ClaimId::EQ01_BOUND, pt(n, k, {}, {}, u)).outcome.holds);
      }
    }
    for (int s = 2; s <= 4; ++s) {
      for (int k = 2; k <= 6; ++k) {
        for (int u = s + 1; u <= s + 6; ++u) {
          CHECK(evaluate_claim(ClaimId::EQHIL_BOUND, pt({}, k, {}, s, u)).outcome.holds);
        }
      }
    }
  }

  TEST_CASE("AffineRule parsing") {
    const AffineRule r = AffineRule::parse("2k+5");
    CHECK(r.a == 2);
    CHECK(r.b == 5);
    CHECK(r.at(30) == 65);
    CHECK(AffineRule::parse("k-1").at(4) == 3);
    CHECK(AffineRule::parse("3k").at(4) == 12);
    CHECK(AffineRule::parse("7").at(100) == 7);
    CHECK(AffineRule::parse(" 2k + 8 ").to_string() == "2k+8");
    CHECK_THROWS_AS(AffineRule::parse("k^2"), ParameterError);
    CHECK_THROWS_AS(AffineRule::parse(""), ParameterError);
  }

  TEST_CASE("find_threshold reproduces the published thresholds") {
    ParamPoint t1;
    t1.t = 1;
    const auto r5 = find_threshold(ClaimId::EQ19_PRED, AffineRule::parse("2k+5"), t1);
    CHECK(r5.threshold <= 30);
    const auto r6 = find_threshold(ClaimId::EQ19_PRED, AffineRule::parse("2k+6"), t1);
    CHECK(r6.threshold <= 15);
    const auto r8 = find_threshold(ClaimId::EQ19_PRED, AffineRule::parse("2k+8"), t1);
    CHECK(r8.threshold <= 10);
    const auto r9 = find_threshold(ClaimId::EQ09_PRED, AffineRule::parse("2k+4"), t1);
    CHECK(r9.threshold <= 12);

    for (const auto* r : {&r5, &r6, &r8}) {
      for (int k = r->threshold; k <= 200; ++k) CHECK(eq19_oracle(2 * k + r->rule.b, k, 1));
      if (r->threshold > 3 && r->monotone()) CHECK_FALSE(eq19_oracle(2 * (r->threshold - 1) + r->rule.b, r->threshold - 1, 1));
    }
    for (int k = r9.threshold; k <= 200; ++k) CHECK(eq09_oracle(2 * k + 4, k));
  }

  TEST_CASE("find_threshold refuses claims that fail at the top of the window") {
    ParamPoint t1;
    t1.t = 1;
    CHECK_THROWS_AS(find_threshold(ClaimId::EQ19_PRED, AffineRule::parse("2k+1"), t1, 3, 40), ParameterError);
  }
}
