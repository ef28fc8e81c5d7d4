#pragma once

#include <span>
#include <string>

#include "extset/core.hpp"

namespace extset {

enum class ConstructionTag { Star, HiltonMilner, A0, Ak, FullLayer };

/// A named extremal family. `param` is the center (Star), u (HiltonMilner),
/// s (A0, Ak) and unused for FullLayer.
struct ConstructionId {
  ConstructionTag tag = ConstructionTag::FullLayer;
  int n = 0;
  int k = 0;
  int param = 0;
};

/// All k-sets containing `center`.
Family star(int n, int k, int center);

/// Sets containing [2,u+1], together with sets that contain 1 and meet [2,u+1].
/// Requires 2 <= u <= k <= n-k.
Family hilton_milner(int n, int k, int u);

/// All k-sets meeting [s].
Family a0(int n, int k, int s);

/// All k-subsets of [k(s+1)-1], viewed inside [n].
Family ak(int k, int s, int n);

Family full_layer(int n, int k);

Family build(const ConstructionId& id);

/// Image of fam under the permutation i -> perm[i-1] of [n].
Family relabel(const Family& fam, std::span<const int> perm);

std::string construction_name(ConstructionTag tag);

}  // namespace extset
