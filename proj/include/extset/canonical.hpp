#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "extset/core.hpp"

namespace extset {

/// Largest ground set accepted by the canonical labeler.
inline constexpr int kCanonicalMaxGround = 16;

/// Permutation of the 0-based ground set: element i maps to perm[i].
using Perm = std::vector<int>;

/// Permutation-invariant encoding of a family, optionally with set colors.
/// Entries are (color << 32) | relabeled mask, sorted ascending.
struct CanonicalForm {
  int n = 0;
  int k = 0;
  std::vector<std::uint64_t> entries;

  std::string bytes() const;
  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// Element i (0-based) is relabeled to labeling[i].
  Perm labeling;
  /// Generators of the automorphism group of the colored family.
  std::vector<Perm> generators;
};

/// Canonical labeling of the set-element incidence structure. `set_colors` is
/// either empty or parallel to `sets`; colors are preserved by isomorphisms.
/// Throws ParameterError when n > kCanonicalMaxGround.
CanonicalLabeling canonical_labeling(int n, int k, std::span<const Mask> sets,
                                     std::span<const int> set_colors = {});

CanonicalForm canonical_form(const Family& fam);

/// Family rebuilt from an uncolored canonical form.
Family family_from_form(const CanonicalForm& form);

bool isomorphic(const Family& a, const Family& b);

Mask permute_mask(Mask m, std::span<const int> perm);

/// For each mask, the index of the smallest member of its orbit under the
/// group generated by `gens`. Every mask image must itself be in `masks`.
std::vector<int> mask_orbits(std::span<const Mask> masks, const std::vector<Perm>& gens);

/// Orbit representative (smallest element) of each ground element.
std::vector<int> element_orbits(int n, const std::vector<Perm>& gens);

}  // namespace extset
