#include <doctest.h>

#include <random>

#include "extset/constructions.hpp"
#include "extset/invariants.hpp"
#include "oracles.hpp"

using namespace extset;

namespace {

Family fam_of(int n, int k, std::vector<Mask> masks) { return Family::from_masks(n, k, std::move(masks)); }

Family sets(int n, int k, std::vector<std::vector<int>> members) {
  Family f(n, k);
  for (const auto& m : members) f = family_insert(f, kset_from_elements(m, n));
  return f;
}

}  // namespace

TEST_SUITE("invariants") {
  TEST_CASE("is_intersecting") {
    CHECK(is_intersecting(star(7, 3, 1)));
    CHECK_FALSE(is_intersecting(sets(7, 3, {{1, 2, 3}, {4, 5, 6}})));
    CHECK(is_intersecting(Family(7, 3)));
  }

  TEST_CASE("is_trivial") {
    CHECK(is_trivial(star(7, 3, 1)));
    for (int k = 2; k <= 5; ++k) CHECK_FALSE(is_trivial(hilton_milner(2 * k + 1, k, k)));
    CHECK(is_trivial(sets(6, 3, {{2, 4, 6}})));
    CHECK_THROWS_AS(is_trivial(Family(6, 3)), ParameterError);
  }

  TEST_CASE("degree_profile") {
    const DegreeProfile s = degree_profile(star(7, 3, 1));
    CHECK(s.degrees[0] == 15);
    CHECK(s.degrees[1] == 5);
    CHECK(s.min_degree == 5);
    CHECK(s.max_degree == 15);
    CHECK(s.argmax == 1);

    const DegreeProfile e = degree_profile(Family(6, 2));
    CHECK(e.max_degree == 0);
    CHECK(e.min_degree == 0);
    CHECK(std::all_of(e.degrees.begin(), e.degrees.end(), [](auto d) { return d == 0; }));

    CHECK(degree_profile(hilton_milner(9, 4, 4)).min_degree == oracle::ibinom(7, 2) - oracle::ibinom(3, 2));
  }

  TEST_CASE("min_t_degree") {
    CHECK(min_t_degree(a0(8, 3, 2), 1).min_degree == oracle::ibinom(7, 2) - oracle::ibinom(5, 2));
    CHECK(min_t_degree(full_layer(6, 3), 3).min_degree == 1);
    CHECK(min_t_degree(star(6, 3, 1), 3).min_degree == 0);
    CHECK(min_t_degree(ak(3, 1, 6), 1).min_degree == 0);
    const TDegreeProfile p = min_t_degree(ak(3, 1, 6), 1);
    CHECK(p.witness.elements() == std::vector<int>{6});
    CHECK_THROWS_AS(min_t_degree(star(6, 3, 1), 0), ParameterError);
    CHECK_THROWS_AS(min_t_degree(star(6, 3, 1), 4), ParameterError);
  }

  TEST_CASE("diversity") {
    CHECK(diversity(star(8, 3, 2)).gamma == 0);
    for (int k = 2; k <= 5; ++k) CHECK(diversity(hilton_milner(2 * k + 2, k, k)).gamma == 1);
    CHECK(diversity(full_layer(5, 3)).gamma == 4);
  }

  TEST_CASE("matching_number") {
    CHECK(matching_number(hilton_milner(9, 4, 4)) == 1);
    CHECK(matching_number(ak(2, 2, 5)) == 2);
    CHECK(matching_number(Family(5, 2)) == 0);
  }

  TEST_CASE("covering_number") {
    CHECK(covering_number(star(7, 3, 4)) == 1);
    CHECK(covering_number(a0(8, 3, 2)) == 2);
    CHECK(covering_number(hilton_milner(9, 4, 4)) == 2);
    CHECK_THROWS_AS(covering_number(Family(5, 2)), ParameterError);
  }

  TEST_CASE("are_cross_intersecting") {
    CHECK(are_cross_intersecting(star(7, 3, 1), star(7, 3, 1)));
    CHECK_FALSE(are_cross_intersecting(sets(7, 3, {{1, 2, 3}}), sets(7, 3, {{4, 5, 6}})));
    std::vector<Mask> a, b;
    for (Mask m : oracle::layer(7, 3)) {
      if ((m & 0b11) == 0b11) a.push_back(m);
      if (m & 0b11) b.push_back(m);
    }
    CHECK(are_cross_intersecting(fam_of(7, 3, a), fam_of(7, 3, b)));
    CHECK_THROWS_AS(are_cross_intersecting(Family(7, 3), Family(7, 2)), ParameterError);
  }

  TEST_CASE("TSetIndexer ranks are a bijection onto [0, C(n,t))") {
    for (int n = 1; n <= 12; ++n) {
      for (int t = 1; t <= std::min(n, 5); ++t) {
        const TSetIndexer idx(n, t);
        const auto all = oracle::layer(n, t);
        REQUIRE(idx.count() == all.size());
        std::vector<bool> seen(all.size(), false);
        for (Mask m : all) {
          const auto r = idx.rank(m);
          REQUIRE(r < all.size());
          CHECK_FALSE(seen[r]);
          seen[r] = true;
          CHECK(idx.unrank(r) == m);
        }
      }
    }
  }

  TEST_CASE("property: counting identities on random families") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 4 + static_cast<int>(rng() % 6);
      const int k = 2 + static_cast<int>(rng() % 3);
      if (k > n) continue;
      const auto masks = oracle::random_family(n, k, 0.3, rng);
      const Family fam = fam_of(n, k, masks);
      const DegreeProfile deg = degree_profile(fam);
      long long total = 0;
      for (auto d : deg.degrees) total += d;
      CHECK(total == static_cast<long long>(k * fam.size()));
      CHECK(deg.min_degree <= deg.max_degree);
      CHECK(deg.max_degree <= static_cast<long long>(fam.size()));
      CHECK(min_t_degree(fam, 1).min_degree == deg.min_degree);
      const auto od = oracle::degrees(n, masks);
      CHECK(std::equal(deg.degrees.begin(), deg.degrees.end(), od.begin(), od.end()));
      for (int t = 1; t <= k; ++t) {
        long long tsum = 0;
        for (Mask tset : oracle::layer(n, t)) tsum += oracle::t_degree(masks, tset);
        CHECK(tsum == oracle::ibinom(k, t) * static_cast<long long>(fam.size()));
        const TDegreeProfile p = min_t_degree(fam, t);
        CHECK(p.min_degree == oracle::min_t_degree(n, t, masks));
        CHECK(oracle::t_degree(masks, p.witness.mask()) == p.min_degree);
        CHECK(p.witness.size() == t);
      }
    }
  }

  TEST_CASE("property: nu and tau agree with exhaustive oracles (n <= 8, k <= 3)") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 7);
      const int k = 1 + static_cast<int>(rng() % std::min(3, n));
      std::vector<Mask> pool = oracle::layer(n, k);
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(std::min<std::size_t>(pool.size(), 1 + rng() % 18));
      const Family fam = fam_of(n, k, pool);
      const int nu = matching_number(fam);
      const int tau = covering_number(fam);
      CHECK(nu == oracle::matching(fam.masks()));
      CHECK(tau == oracle::cover(n, fam.masks()));
      CHECK(nu <= tau);
      CHECK(tau <= k * nu);
      CHECK((nu == 1) == is_intersecting(fam));
      if (is_intersecting(fam)) CHECK((diversity(fam).gamma >= 1) == !is_trivial(fam));
    }
  }
}
