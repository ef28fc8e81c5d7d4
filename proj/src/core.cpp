#include "extset/core.hpp"

#include <algorithm>
#include <sstream>

namespace extset {

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1 || n > kMaxGround) {
    throw ParameterError("ground set size must satisfy 1 <= n <= 64, got " + std::to_string(n));
  }
}

KSet KSet::from_mask(Mask mask, int n) {
  GroundSet ground(n);
  if ((mask & ~ground.full_mask()) != 0) {
    throw ParameterError("mask has bits above position n = " + std::to_string(n));
  }
  return KSet(mask, n);
}

std::vector<int> KSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

KSet kset_from_elements(std::span<const int> elements, int n) {
  GroundSet ground(n);
  Mask mask = 0;
  for (int e : elements) {
    if (!ground.contains(e)) {
      throw ParameterError("element " + std::to_string(e) + " outside [1," + std::to_string(n) + "]");
    }
    if (mask & element_bit(e)) {
      throw ParameterError("duplicate element " + std::to_string(e));
    }
    mask |= element_bit(e);
  }
  return KSet::from_mask(mask, n);
}

bool disjoint(const KSet& a, const KSet& b) {
  if (a.ground() != b.ground()) throw ParameterError("disjoint: sets live in different ground sets");
  return masks_disjoint(a.mask(), b.mask());
}

Family::Family(int n, int k) : n_(n), k_(k) {
  GroundSet ground(n);
  if (k < 0 || k > n) {
    throw ParameterError("family uniformity must satisfy 0 <= k <= n, got k = " + std::to_string(k));
  }
}

Family Family::from_masks(int n, int k, std::vector<Mask> masks) {
  Family shell(n, k);
  const Mask full = low_bits(n);
  for (Mask m : masks) {
    if ((m & ~full) != 0) throw ParameterError("set has elements outside [n]");
    if (popcount(m) != k) {
      throw ParameterError("set of size " + std::to_string(popcount(m)) + " in a family of " +
                           std::to_string(k) + "-sets");
    }
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return Family(n, k, std::move(masks));
}

bool Family::contains(Mask m) const { return std::binary_search(sets_.begin(), sets_.end(), m); }

std::string Family::to_string() const {
  std::ostringstream os;
  bool first_set = true;
  for (Mask m : sets_) {
    if (!first_set) os << ' ';
    first_set = false;
    os << '{';
    bool first = true;
    for (int e : KSet::from_mask(m, n_).elements()) {
      if (!first) os << ',';
      first = false;
      os << e;
    }
    os << '}';
  }
  return os.str();
}

Family family_insert(const Family& fam, const KSet& s) {
  if (s.ground() != fam.n() || s.size() != fam.k()) {
    throw ParameterError("family_insert: set does not match the family's (n,k)");
  }
  if (fam.contains(s.mask())) return fam;
  std::vector<Mask> masks(fam.masks().begin(), fam.masks().end());
  masks.push_back(s.mask());
  return Family::from_masks(fam.n(), fam.k(), std::move(masks));
}

std::vector<Mask> all_ksets(int n, int k) {
  GroundSet ground(n);
  if (k < 0 || k > n) return {};
  std::vector<Mask> out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  const Mask last = low_bits(k) << (n - k);
  for (Mask m = low_bits(k);; m = next_same_popcount(m)) {
    out.push_back(m);
    if (m == last) break;
  }
  return out;
}

}  // namespace extset
