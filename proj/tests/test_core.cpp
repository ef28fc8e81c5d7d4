#include <doctest.h>

#include <random>

#include "extset/family_io.hpp"
#include "oracles.hpp"

using namespace extset;

TEST_SUITE("core") {
  TEST_CASE("kset_from_elements encodes members into bits") {
    const std::vector<int> e{2, 3, 4};
    const KSet s = kset_from_elements(e, 6);
    CHECK(s.mask() == 0b001110);
    CHECK(s.size() == 3);
    CHECK(s.elements() == e);

    const KSet empty = kset_from_elements(std::vector<int>{}, 5);
    CHECK(empty.mask() == 0);
    CHECK(empty.size() == 0);

    const KSet full = kset_from_elements(std::vector<int>{1, 2, 3, 4, 5, 6}, 6);
    CHECK(full.mask() == low_bits(6));
    CHECK(full.size() == 6);
  }

  TEST_CASE("kset_from_elements rejects bad input") {
    CHECK_THROWS_AS(kset_from_elements(std::vector<int>{0, 1}, 4), ParameterError);
    CHECK_THROWS_AS(kset_from_elements(std::vector<int>{5}, 4), ParameterError);
    CHECK_THROWS_AS(kset_from_elements(std::vector<int>{2, 2}, 4), ParameterError);
    CHECK_THROWS_AS(KSet::from_mask(Mask{1} << 4, 4), ParameterError);
  }

  TEST_CASE("elements round-trips sorted input") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 64);
      std::vector<int> e;
      for (int i = 1; i <= n; ++i) {
        if (rng() & 1U) e.push_back(i);
      }
      CHECK(kset_from_elements(e, n).elements() == e);
    }
  }

  TEST_CASE("disjoint") {
    auto s = [](std::vector<int> e) { return kset_from_elements(e, 6); };
    CHECK(disjoint(s({1, 2}), s({3, 4})));
    CHECK_FALSE(disjoint(s({1, 2}), s({2, 3})));
    CHECK_FALSE(disjoint(s({1, 2}), s({1, 2})));
    CHECK_THROWS_AS(disjoint(s({1}), kset_from_elements(std::vector<int>{2}, 7)), ParameterError);
  }

  TEST_CASE("family_insert is idempotent and order independent") {
    const Family empty(6, 2);
    const KSet a = kset_from_elements(std::vector<int>{1, 2}, 6);
    const KSet b = kset_from_elements(std::vector<int>{3, 5}, 6);
    const Family one = family_insert(empty, a);
    CHECK(one.size() == 1);
    CHECK(family_insert(one, a) == one);
    CHECK(family_insert(family_insert(empty, a), b) == family_insert(family_insert(empty, b), a));
    CHECK_THROWS_AS(family_insert(empty, kset_from_elements(std::vector<int>{1, 2, 3}, 6)), ParameterError);
    CHECK_THROWS_AS(family_insert(empty, kset_from_elements(std::vector<int>{1, 2}, 7)), ParameterError);
  }

  TEST_CASE("families built through the API are strictly increasing") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 3 + static_cast<int>(rng() % 6);
      const int k = 1 + static_cast<int>(rng() % (n - 1));
      Family fam(n, k);
      std::vector<Mask> pool = oracle::layer(n, k);
      for (int step = 0; step < 30; ++step) {
        fam = family_insert(fam, KSet::from_mask(pool[rng() % pool.size()], n));
      }
      const auto m = fam.masks();
      for (std::size_t i = 1; i < m.size(); ++i) CHECK(m[i - 1] < m[i]);
    }
  }

  TEST_CASE("all_ksets matches a full scan") {
    for (int n = 1; n <= 10; ++n) {
      for (int k = 0; k <= n; ++k) CHECK(all_ksets(n, k) == oracle::layer(n, k));
    }
  }
}

TEST_SUITE("family_io") {
  TEST_CASE("text round trip") {
    const Family fam = Family::from_masks(7, 3, {0b0000111, 0b0011001, 0b1100001});
    const ParsedFamily back = parse_family_text(format_family_text(fam));
    CHECK(back.family == fam);
    CHECK(back.duplicates == 0);
  }

  TEST_CASE("json round trip") {
    const Family fam = Family::from_masks(5, 2, {0b00011, 0b10100});
    CHECK(parse_family_json(format_family_json(fam)).family == fam);
    CHECK(parse_family_auto(format_family_json(fam)).family == fam);
  }

  TEST_CASE("comments, blank lines and duplicates") {
    const ParsedFamily p = parse_family_text("# header\n5 2\n\n1 2\n2 3 # edge\n1 2\n");
    CHECK(p.family.size() == 2);
    CHECK(p.duplicates == 1);
  }

  TEST_CASE("errors carry line numbers") {
    auto line_of = [](const char* text) {
      try {
        parse_family_text(text);
      } catch (const ParseError& e) {
        return e.line();
      }
      return -1;
    };
    CHECK(line_of("5 2\n1 2\n1 9\n") == 3);
    CHECK(line_of("5 2\n1 2 3\n") == 2);
    CHECK(line_of("5 2\n2 1\n") == 2);
    CHECK(line_of("5\n") == 1);
    CHECK(line_of("5 2\n1 x\n") == 2);
    CHECK_THROWS_AS(parse_family_json("{\"n\": 5}"), ParseError);
  }
}
