#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace extset {

using Mask = std::uint64_t;

inline constexpr int kMaxGround = 64;

/// Raised when an operation's parameters violate its documented preconditions.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline int popcount(Mask m) { return std::popcount(m); }

/// Mask with the low n bits set, valid for n in [0, 64].
inline constexpr Mask low_bits(int n) {
  return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

/// Bit for a 1-indexed element.
inline constexpr Mask element_bit(int element) { return Mask{1} << (element - 1); }

inline constexpr bool masks_disjoint(Mask a, Mask b) { return (a & b) == 0; }

/// The ground set [n] = {1, ..., n}.
class GroundSet {
 public:
  explicit GroundSet(int n);

  int size() const { return n_; }
  Mask full_mask() const { return low_bits(n_); }
  bool contains(int element) const { return element >= 1 && element <= n_; }

  friend bool operator==(GroundSet, GroundSet) = default;

 private:
  int n_;
};

/// A subset of [n] stored as a bitmask; element i lives in bit i-1.
class KSet {
 public:
  KSet() = default;

  /// Validates that no bit above position n is set.
  static KSet from_mask(Mask mask, int n);

  Mask mask() const { return mask_; }
  int ground() const { return n_; }
  int size() const { return popcount(mask_); }
  bool contains(int element) const {
    return element >= 1 && element <= n_ && (mask_ & element_bit(element)) != 0;
  }
  /// Members in increasing order, 1-indexed.
  std::vector<int> elements() const;

  friend bool operator==(const KSet&, const KSet&) = default;
  friend auto operator<=>(const KSet& a, const KSet& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.mask_ <=> b.mask_;
  }

 private:
  KSet(Mask mask, int n) : mask_(mask), n_(n) {}

  Mask mask_ = 0;
  int n_ = 0;
};

/// Throws ParameterError on an out-of-range or repeated element.
KSet kset_from_elements(std::span<const int> elements, int n);

/// True iff the two sets share no element. Both must live in the same [n].
bool disjoint(const KSet& a, const KSet& b);

/// A deduplicated family of k-subsets of [n], stored in increasing mask order.
///
/// Families are immutable; "modifying" operations return a new value.
class Family {
 public:
  Family(int n, int k);

  /// Sorts and deduplicates; every mask must be a k-subset of [n].
  static Family from_masks(int n, int k, std::vector<Mask> masks);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }

  std::span<const Mask> masks() const { return sets_; }
  KSet at(std::size_t i) const { return KSet::from_mask(sets_[i], n_); }
  bool contains(Mask m) const;
  bool contains(const KSet& s) const { return s.ground() == n_ && contains(s.mask()); }

  /// Text rendering used in diagnostics: {1,2,3} {1,4,5} ...
  std::string to_string() const;

  friend bool operator==(const Family&, const Family&) = default;

 private:
  Family(int n, int k, std::vector<Mask> sorted_unique)
      : n_(n), k_(k), sets_(std::move(sorted_unique)) {}

  int n_;
  int k_;
  std::vector<Mask> sets_;
};

/// Returns fam with s added exactly once. Throws on an (n,k) mismatch.
Family family_insert(const Family& fam, const KSet& s);

/// All k-subsets of [n] in increasing mask order.
std::vector<Mask> all_ksets(int n, int k);

/// Next mask with the same popcount (Gosper's hack). Undefined for mask == 0.
inline Mask next_same_popcount(Mask v) {
  const Mask t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

}  // namespace extset
