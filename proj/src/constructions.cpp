#include "extset/constructions.hpp"

#include <algorithm>
#include <vector>

namespace extset {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

template <typename Pred>
Family filter_layer(int n, int k, Pred keep) {
  std::vector<Mask> out;
  for (Mask m : all_ksets(n, k)) {
    if (keep(m)) out.push_back(m);
  }
  return Family::from_masks(n, k, std::move(out));
}

}  // namespace

Family star(int n, int k, int center) {
  require(n >= 1 && n <= kMaxGround, "star: need 1 <= n <= 64");
  require(k >= 1 && k <= n, "star: need 1 <= k <= n");
  require(center >= 1 && center <= n, "star: center must lie in [1,n]");
  const Mask c = element_bit(center);
  return filter_layer(n, k, [c](Mask m) { return (m & c) != 0; });
}

Family hilton_milner(int n, int k, int u) {
  require(n >= 1 && n <= kMaxGround, "hilton_milner: need 1 <= n <= 64");
  require(u >= 2, "hilton_milner: need u >= 2");
  require(u <= k, "hilton_milner: need u <= k");
  require(k <= n - k, "hilton_milner: need k <= n - k");
  require(n >= u + 1, "hilton_milner: need n >= u + 1");
  const Mask one = element_bit(1);
  const Mask anchor = low_bits(u + 1) & ~one;  // [2, u+1]
  return filter_layer(n, k, [=](Mask m) {
    return (m & anchor) == anchor || ((m & one) != 0 && (m & anchor) != 0);
  });
}

Family a0(int n, int k, int s) {
  require(n >= 2 && n <= kMaxGround, "a0: need 2 <= n <= 64");
  require(s >= 1 && s <= n - 1, "a0: need 1 <= s <= n - 1");
  require(k >= 0 && k <= n, "a0: need 0 <= k <= n");
  const Mask head = low_bits(s);
  return filter_layer(n, k, [head](Mask m) { return (m & head) != 0; });
}

Family ak(int k, int s, int n) {
  require(k >= 1 && s >= 1, "ak: need k >= 1 and s >= 1");
  const int support = k * (s + 1) - 1;
  require(n >= support, "ak: need n >= k(s+1) - 1 = " + std::to_string(support));
  require(n <= kMaxGround, "ak: need n <= 64");
  const Mask inside = low_bits(support);
  return filter_layer(n, k, [inside](Mask m) { return (m & ~inside) == 0; });
}

Family full_layer(int n, int k) {
  require(n >= 1 && n <= kMaxGround, "full_layer: need 1 <= n <= 64");
  require(k >= 0 && k <= n, "full_layer: need 0 <= k <= n");
  return Family::from_masks(n, k, all_ksets(n, k));
}

Family build(const ConstructionId& id) {
  switch (id.tag) {
    case ConstructionTag::Star:
      return star(id.n, id.k, id.param);
    case ConstructionTag::HiltonMilner:
      return hilton_milner(id.n, id.k, id.param);
    case ConstructionTag::A0:
      return a0(id.n, id.k, id.param);
    case ConstructionTag::Ak:
      return ak(id.k, id.param, id.n);
    case ConstructionTag::FullLayer:
      return full_layer(id.n, id.k);
  }
  throw ParameterError("unknown construction");
}

Family relabel(const Family& fam, std::span<const int> perm) {
  const int n = fam.n();
  require(static_cast<int>(perm.size()) == n, "relabel: permutation has the wrong length");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int p : perm) {
    require(p >= 1 && p <= n && !seen[static_cast<std::size_t>(p)], "relabel: not a permutation of [n]");
    seen[static_cast<std::size_t>(p)] = true;
  }
  std::vector<Mask> out;
  out.reserve(fam.size());
  for (Mask m : fam.masks()) {
    Mask img = 0;
    for (Mask r = m; r != 0; r &= r - 1) img |= element_bit(perm[static_cast<std::size_t>(std::countr_zero(r))]);
    out.push_back(img);
  }
  return Family::from_masks(n, fam.k(), std::move(out));
}

std::string construction_name(ConstructionTag tag) {
  switch (tag) {
    case ConstructionTag::Star:
      return "star";
    case ConstructionTag::HiltonMilner:
      return "hm";
    case ConstructionTag::A0:
      return "a0";
    case ConstructionTag::Ak:
      return "ak";
    case ConstructionTag::FullLayer:
      return "full";
  }
  return "unknown";
}

}  // namespace extset
