#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "extset/core.hpp"

namespace extset {

/// Per-element degrees of a family. Minimum and maximum range over all of [n],
/// so an element lying in no member pulls the minimum to zero.
struct DegreeProfile {
  std::vector<std::int64_t> degrees;  // degrees[i-1] = d_i
  std::int64_t max_degree = 0;
  std::int64_t min_degree = 0;
  int argmax = 1;  // smallest element attaining max_degree
};

struct TDegreeProfile {
  int t = 0;
  std::int64_t min_degree = 0;
  KSet witness;  // lowest-ranked t-set attaining min_degree
};

struct Diversity {
  std::int64_t gamma = 0;
};

bool is_intersecting(const Family& fam);

/// True iff all members share an element. Throws ParameterError on an empty family.
bool is_trivial(const Family& fam);

DegreeProfile degree_profile(const Family& fam);

/// Minimum number of members containing T over every t-subset T of [n].
TDegreeProfile min_t_degree(const Family& fam, int t);

Diversity diversity(const Family& fam);

/// Maximum number of pairwise disjoint members.
int matching_number(const Family& fam);

/// Minimum size of an element set meeting every member. Throws on an empty family.
int covering_number(const Family& fam);

bool are_cross_intersecting(const Family& a, const Family& b);

/// Colex ranking of t-subsets of [n] (combinatorial number system).
class TSetIndexer {
 public:
  TSetIndexer(int n, int t);

  int n() const { return n_; }
  int t() const { return t_; }
  std::uint64_t count() const { return count_; }
  std::uint64_t rank(Mask tset) const;
  Mask unrank(std::uint64_t r) const;

  /// Calls f(rank) for every t-subset of `set`.
  template <typename F>
  void for_each_subset_rank(Mask set, F&& f) const;

 private:
  int n_;
  int t_;
  std::uint64_t count_;
};

/// Exact binomial coefficient for 0 <= b <= a <= 64 (0 outside that range).
std::uint64_t small_binom(int a, int b);

namespace detail {

/// Mask-level kernels shared with the search engine.
int matching_number(std::span<const Mask> sets, int k);
/// True iff some `target` members are pairwise disjoint.
bool has_matching(std::span<const Mask> sets, int k, int target);
int covering_number(std::span<const Mask> sets);
/// Accumulates t-degrees of `sets` into counts (size = indexer.count()).
void add_t_degrees(std::span<const Mask> sets, const TSetIndexer& indexer,
                   std::vector<std::int64_t>& counts);

}  // namespace detail

template <typename F>
void TSetIndexer::for_each_subset_rank(Mask set, F&& f) const {
  int pos[64];
  int k = 0;
  for (Mask m = set; m != 0; m &= m - 1) pos[k++] = std::countr_zero(m);
  if (t_ > k) return;
  if (t_ == 0) {
    f(std::uint64_t{0});
    return;
  }
  int idx[64];
  for (int i = 0; i < t_; ++i) idx[i] = i;
  while (true) {
    std::uint64_t r = 0;
    for (int i = 0; i < t_; ++i) r += small_binom(pos[idx[i]], i + 1);
    f(r);
    int i = t_ - 1;
    while (i >= 0 && idx[i] == k - t_ + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < t_; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace extset
