#include "extset/invariants.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace extset {
namespace {

struct BinomTable {
  std::array<std::array<std::uint64_t, 65>, 65> c{};
  BinomTable() {
    for (int a = 0; a <= 64; ++a) {
      c[a][0] = 1;
      for (int b = 1; b <= a; ++b) c[a][b] = c[a - 1][b - 1] + (b <= a - 1 ? c[a - 1][b] : 0);
    }
  }
};

const BinomTable& binom_table() {
  static const BinomTable table;
  return table;
}

constexpr std::uint64_t kMaxTSets = std::uint64_t{1} << 27;

Mask union_of(std::span<const Mask> sets) {
  Mask u = 0;
  for (Mask m : sets) u |= m;
  return u;
}

int greedy_packing(std::span<const Mask> sets) {
  Mask used = 0;
  int count = 0;
  for (Mask m : sets) {
    if ((m & used) == 0) {
      used |= m;
      ++count;
    }
  }
  return count;
}

// Branch on the lowest-indexed remaining set: take it (drop everything meeting
// it) or discard it. Bound: packing cannot exceed |remaining| or |union|/k.
void packing_search(std::vector<Mask>& cands, int k, int count, int& best, int target) {
  if (best >= target) return;
  if (cands.empty()) {
    best = std::max(best, count);
    return;
  }
  const int by_size = static_cast<int>(cands.size());
  const int by_support = popcount(union_of(cands)) / k;
  if (count + std::min(by_size, by_support) <= best) return;

  const Mask head = cands.front();
  std::vector<Mask> taken;
  taken.reserve(cands.size());
  for (std::size_t i = 1; i < cands.size(); ++i) {
    if ((cands[i] & head) == 0) taken.push_back(cands[i]);
  }
  packing_search(taken, k, count + 1, best, target);
  if (best >= target) return;

  std::vector<Mask> rest(cands.begin() + 1, cands.end());
  packing_search(rest, k, count, best, target);
}

void cover_search(const std::vector<Mask>& uncovered, int chosen, int& best) {
  if (uncovered.empty()) {
    best = std::min(best, chosen);
    return;
  }
  // Every pairwise disjoint member needs its own cover element.
  if (chosen + greedy_packing(uncovered) >= best) return;
  // Some element of the first uncovered member must be chosen.
  const Mask pivot = uncovered.front();
  std::vector<Mask> next;
  next.reserve(uncovered.size());
  for (Mask m = pivot; m != 0; m &= m - 1) {
    const Mask e = m & (~m + 1);
    next.clear();
    for (Mask s : uncovered) {
      if ((s & e) == 0) next.push_back(s);
    }
    cover_search(next, chosen + 1, best);
  }
}

}  // namespace

std::uint64_t small_binom(int a, int b) {
  if (a < 0 || b < 0 || b > a || a > 64) return 0;
  return binom_table().c[a][b];
}

TSetIndexer::TSetIndexer(int n, int t) : n_(n), t_(t), count_(small_binom(n, t)) {
  if (n < 0 || n > 64 || t < 0 || t > n) throw ParameterError("t-set indexer needs 0 <= t <= n <= 64");
  if (count_ > kMaxTSets) throw ParameterError("C(n,t) too large for an exact t-degree table");
}

std::uint64_t TSetIndexer::rank(Mask tset) const {
  std::uint64_t r = 0;
  int i = 1;
  for (Mask m = tset; m != 0; m &= m - 1) r += small_binom(std::countr_zero(m), i++);
  return r;
}

Mask TSetIndexer::unrank(std::uint64_t r) const {
  Mask out = 0;
  for (int i = t_; i >= 1; --i) {
    int c = i - 1;
    while (small_binom(c + 1, i) <= r) ++c;
    r -= small_binom(c, i);
    out |= Mask{1} << c;
  }
  return out;
}

namespace detail {

int matching_number(std::span<const Mask> sets, int k) {
  if (sets.empty()) return 0;
  if (k == 0) return 1;  // only the empty set, and it is a single member
  std::vector<Mask> cands(sets.begin(), sets.end());
  int best = greedy_packing(sets);
  packing_search(cands, k, 0, best, std::numeric_limits<int>::max());
  return best;
}

bool has_matching(std::span<const Mask> sets, int k, int target) {
  if (target <= 0) return true;
  if (sets.empty()) return false;
  if (k == 0) return target <= 1;
  int best = greedy_packing(sets);
  if (best >= target) return true;
  std::vector<Mask> cands(sets.begin(), sets.end());
  packing_search(cands, k, 0, best, target);
  return best >= target;
}

int covering_number(std::span<const Mask> sets) {
  if (sets.empty()) throw ParameterError("covering number of an empty family is undefined");
  for (Mask m : sets) {
    if (m == 0) throw ParameterError("a family containing the empty set has no cover");
  }
  // Greedy cover for the initial incumbent.
  std::vector<Mask> uncovered(sets.begin(), sets.end());
  int greedy = 0;
  while (!uncovered.empty()) {
    int counts[64] = {};
    for (Mask s : uncovered) {
      for (Mask m = s; m != 0; m &= m - 1) ++counts[std::countr_zero(m)];
    }
    const int e = static_cast<int>(std::max_element(counts, counts + 64) - counts);
    std::erase_if(uncovered, [e](Mask s) { return (s >> e) & 1; });
    ++greedy;
  }
  int best = greedy;
  std::vector<Mask> all(sets.begin(), sets.end());
  cover_search(all, 0, best);
  return best;
}

void add_t_degrees(std::span<const Mask> sets, const TSetIndexer& indexer,
                   std::vector<std::int64_t>& counts) {
  for (Mask s : sets) indexer.for_each_subset_rank(s, [&](std::uint64_t r) { ++counts[r]; });
}

}  // namespace detail

bool is_intersecting(const Family& fam) {
  const auto sets = fam.masks();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if ((sets[i] & sets[j]) == 0) return false;
    }
  }
  return true;
}

bool is_trivial(const Family& fam) {
  if (fam.empty()) throw ParameterError("is_trivial: family must be nonempty");
  Mask common = ~Mask{0};
  for (Mask m : fam.masks()) common &= m;
  return common != 0;
}

DegreeProfile degree_profile(const Family& fam) {
  DegreeProfile p;
  p.degrees.assign(static_cast<std::size_t>(fam.n()), 0);
  for (Mask s : fam.masks()) {
    for (Mask m = s; m != 0; m &= m - 1) ++p.degrees[static_cast<std::size_t>(std::countr_zero(m))];
  }
  const auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
  p.min_degree = *lo;
  p.max_degree = *hi;
  p.argmax = static_cast<int>(std::find(p.degrees.begin(), p.degrees.end(), *hi) - p.degrees.begin()) + 1;
  return p;
}

TDegreeProfile min_t_degree(const Family& fam, int t) {
  if (t < 1 || t > fam.k()) {
    throw ParameterError("min_t_degree: need 1 <= t <= k, got t = " + std::to_string(t));
  }
  TSetIndexer indexer(fam.n(), t);
  std::vector<std::int64_t> counts(indexer.count(), 0);
  detail::add_t_degrees(fam.masks(), indexer, counts);
  const auto it = std::min_element(counts.begin(), counts.end());
  TDegreeProfile p;
  p.t = t;
  p.min_degree = *it;
  p.witness = KSet::from_mask(indexer.unrank(static_cast<std::uint64_t>(it - counts.begin())), fam.n());
  return p;
}

Diversity diversity(const Family& fam) {
  if (fam.empty()) return {};
  return {static_cast<std::int64_t>(fam.size()) - degree_profile(fam).max_degree};
}

int matching_number(const Family& fam) { return detail::matching_number(fam.masks(), fam.k()); }

int covering_number(const Family& fam) {
  if (fam.empty()) throw ParameterError("covering_number: family must be nonempty");
  return detail::covering_number(fam.masks());
}

bool are_cross_intersecting(const Family& a, const Family& b) {
  if (a.n() != b.n() || a.k() != b.k()) {
    throw ParameterError("are_cross_intersecting: families have different (n,k)");
  }
  for (Mask x : a.masks()) {
    for (Mask y : b.masks()) {
      if ((x & y) == 0) return false;
    }
  }
  return true;
}

}  // namespace extset
