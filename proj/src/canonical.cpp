#include "extset/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace extset {
namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int size) : parent(static_cast<std::size_t>(size)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  // The smaller index becomes the root, so roots are orbit minima.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
  }
};

// Individualization-refinement over the element/set incidence structure.
// Colorings assign each element the number of elements in strictly smaller
// cells, so a discrete coloring is itself a labeling of [0,n).
class Labeler {
 public:
  Labeler(int n, std::span<const Mask> sets, std::span<const int> colors)
      : n_(n), sets_(sets), colors_(colors), incidence_(static_cast<std::size_t>(n)) {
    for (std::size_t s = 0; s < sets.size(); ++s) {
      for (Mask m = sets[s]; m != 0; m &= m - 1) incidence_[static_cast<std::size_t>(std::countr_zero(m))].push_back(s);
    }
    set_hash_.resize(sets.size());
  }

  void run() {
    std::vector<int> col(static_cast<std::size_t>(n_), 0);
    refine(col);
    std::vector<int> path;
    explore(col, path);
  }

  const std::vector<std::uint64_t>& best_certificate() const { return best_cert_; }
  const Perm& best_labeling() const { return best_lab_; }
  std::vector<Perm>& generators() { return gens_; }

 private:
  int set_color(std::size_t s) const { return colors_.empty() ? 0 : colors_[s]; }

  void refine(std::vector<int>& col) {
    int cells = count_cells(col);
    std::vector<std::pair<std::pair<int, std::uint64_t>, int>> keyed(static_cast<std::size_t>(n_));
    while (cells < n_) {
      for (std::size_t s = 0; s < sets_.size(); ++s) {
        std::uint64_t h = splitmix(0xc0105ULL + static_cast<std::uint64_t>(set_color(s)));
        for (Mask m = sets_[s]; m != 0; m &= m - 1) {
          h += splitmix(static_cast<std::uint64_t>(col[static_cast<std::size_t>(std::countr_zero(m))]) + 1);
        }
        set_hash_[s] = h;
      }
      for (int e = 0; e < n_; ++e) {
        std::uint64_t acc = 0;
        for (std::size_t s : incidence_[static_cast<std::size_t>(e)]) acc += splitmix(set_hash_[s]);
        keyed[static_cast<std::size_t>(e)] = {{col[static_cast<std::size_t>(e)], acc}, e};
      }
      std::sort(keyed.begin(), keyed.end());
      int next_cells = 0;
      for (int i = 0; i < n_; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        if (i == 0 || keyed[idx].first != keyed[idx - 1].first) {
          ++next_cells;
          col[static_cast<std::size_t>(keyed[idx].second)] = i;
        } else {
          col[static_cast<std::size_t>(keyed[idx].second)] = col[static_cast<std::size_t>(keyed[idx - 1].second)];
        }
      }
      if (next_cells == cells) break;
      cells = next_cells;
    }
  }

  int count_cells(const std::vector<int>& col) const {
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    int c = 0;
    for (int v : col) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        ++c;
      }
    }
    return c;
  }

  std::vector<std::uint64_t> certificate(const Perm& lab) const {
    std::vector<std::uint64_t> cert;
    cert.reserve(sets_.size());
    for (std::size_t s = 0; s < sets_.size(); ++s) {
      cert.push_back((static_cast<std::uint64_t>(set_color(s)) << 32) | permute_mask(sets_[s], lab));
    }
    std::sort(cert.begin(), cert.end());
    return cert;
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    const std::size_t len = std::min(a.size(), b.size());
    std::size_t i = 0;
    while (i < len && a[i] == b[i]) ++i;
    return static_cast<int>(i);
  }

  // gamma = target^{-1} o current, an automorphism mapping the current leaf onto the target.
  Perm automorphism(const Perm& current, const Perm& target) const {
    Perm inv(static_cast<std::size_t>(n_));
    for (int e = 0; e < n_; ++e) inv[static_cast<std::size_t>(target[static_cast<std::size_t>(e)])] = e;
    Perm gamma(static_cast<std::size_t>(n_));
    for (int e = 0; e < n_; ++e) gamma[static_cast<std::size_t>(e)] = inv[static_cast<std::size_t>(current[static_cast<std::size_t>(e)])];
    return gamma;
  }

  // Returns the depth to resume at: a node at depth d keeps iterating its
  // children while the returned value is >= d.
  int explore(const std::vector<int>& col, std::vector<int>& path) {
    const int depth = static_cast<int>(path.size());
    std::vector<int> cell_size(static_cast<std::size_t>(n_), 0);
    for (int v : col) ++cell_size[static_cast<std::size_t>(v)];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (cell_size[static_cast<std::size_t>(c)] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) return leaf(col, path);

    std::vector<int> tried;
    for (int w = 0; w < n_; ++w) {
      if (col[static_cast<std::size_t>(w)] != target) continue;
      if (!tried.empty() && in_tried_orbit(w, tried, path)) continue;
      std::vector<int> child = col;
      for (int v = 0; v < n_; ++v) {
        if (v != w && child[static_cast<std::size_t>(v)] == target) child[static_cast<std::size_t>(v)] = target + 1;
      }
      refine(child);
      path.push_back(w);
      const int resume = explore(child, path);
      path.pop_back();
      tried.push_back(w);
      if (resume < depth) return resume;
    }
    return depth;
  }

  bool in_tried_orbit(int w, const std::vector<int>& tried, const std::vector<int>& path) {
    UnionFind uf(n_);
    bool any = false;
    for (const Perm& g : gens_) {
      const bool fixes = std::all_of(path.begin(), path.end(), [&g](int v) { return g[static_cast<std::size_t>(v)] == v; });
      if (!fixes) continue;
      any = true;
      for (int e = 0; e < n_; ++e) uf.unite(e, g[static_cast<std::size_t>(e)]);
    }
    if (!any) return false;
    const int root = uf.find(w);
    return std::any_of(tried.begin(), tried.end(), [&](int v) { return uf.find(v) == root; });
  }

  int leaf(const std::vector<int>& col, const std::vector<int>& path) {
    const int depth = static_cast<int>(path.size());
    Perm lab(col.begin(), col.end());
    std::vector<std::uint64_t> cert = certificate(lab);
    if (first_lab_.empty()) {
      first_cert_ = best_cert_ = std::move(cert);
      first_lab_ = best_lab_ = std::move(lab);
      first_path_ = best_path_ = path;
      return depth;
    }
    if (cert == first_cert_) {
      gens_.push_back(automorphism(lab, first_lab_));
      return common_prefix(path, first_path_);
    }
    if (cert == best_cert_) {
      gens_.push_back(automorphism(lab, best_lab_));
      return common_prefix(path, best_path_);
    }
    if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_lab_ = std::move(lab);
      best_path_ = path;
    }
    return depth;
  }

  int n_;
  std::span<const Mask> sets_;
  std::span<const int> colors_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::vector<std::uint64_t> set_hash_;

  std::vector<std::uint64_t> first_cert_, best_cert_;
  Perm first_lab_, best_lab_;
  std::vector<int> first_path_, best_path_;
  std::vector<Perm> gens_;
};

}  // namespace

std::string CanonicalForm::bytes() const {
  std::string out;
  auto put = [&out](std::uint64_t v, int width) {
    for (int i = 0; i < width; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xffu));
  };
  put(static_cast<std::uint64_t>(n), 1);
  put(static_cast<std::uint64_t>(k), 1);
  put(entries.size(), 4);
  for (std::uint64_t e : entries) put(e, 8);
  return out;
}

Mask permute_mask(Mask m, std::span<const int> perm) {
  Mask out = 0;
  for (; m != 0; m &= m - 1) out |= Mask{1} << perm[static_cast<std::size_t>(std::countr_zero(m))];
  return out;
}

CanonicalLabeling canonical_labeling(int n, int k, std::span<const Mask> sets, std::span<const int> set_colors) {
  if (n < 0 || n > kCanonicalMaxGround) {
    throw ParameterError("canonical labeling needs n <= " + std::to_string(kCanonicalMaxGround) + ", got " +
                         std::to_string(n));
  }
  if (!set_colors.empty() && set_colors.size() != sets.size()) {
    throw ParameterError("canonical labeling: set_colors must be parallel to sets");
  }
  CanonicalLabeling out;
  out.form.n = n;
  out.form.k = k;
  if (n == 0) {
    for (std::size_t s = 0; s < sets.size(); ++s) {
      out.form.entries.push_back(static_cast<std::uint64_t>(set_colors.empty() ? 0 : set_colors[s]) << 32);
    }
    std::sort(out.form.entries.begin(), out.form.entries.end());
    return out;
  }
  Labeler labeler(n, sets, set_colors);
  labeler.run();
  out.form.entries = labeler.best_certificate();
  out.labeling = labeler.best_labeling();
  out.generators = std::move(labeler.generators());
  return out;
}

CanonicalForm canonical_form(const Family& fam) { return canonical_labeling(fam.n(), fam.k(), fam.masks()).form; }

Family family_from_form(const CanonicalForm& form) {
  std::vector<Mask> masks;
  masks.reserve(form.entries.size());
  for (std::uint64_t e : form.entries) {
    if ((e >> 32) != 0) throw ParameterError("family_from_form: form carries set colors");
    masks.push_back(e & 0xffffffffULL);
  }
  return Family::from_masks(form.n, form.k, std::move(masks));
}

bool isomorphic(const Family& a, const Family& b) {
  if (a.n() != b.n() || a.k() != b.k() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<int> mask_orbits(std::span<const Mask> masks, const std::vector<Perm>& gens) {
  std::unordered_map<Mask, int> index;
  index.reserve(masks.size() * 2);
  for (std::size_t i = 0; i < masks.size(); ++i) index.emplace(masks[i], static_cast<int>(i));
  UnionFind uf(static_cast<int>(masks.size()));
  for (const Perm& g : gens) {
    for (std::size_t i = 0; i < masks.size(); ++i) {
      const auto it = index.find(permute_mask(masks[i], g));
      if (it == index.end()) throw ParameterError("mask_orbits: mask list is not invariant under the generators");
      uf.unite(static_cast<int>(i), it->second);
    }
  }
  std::vector<int> rep(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) rep[i] = uf.find(static_cast<int>(i));
  return rep;
}

std::vector<int> element_orbits(int n, const std::vector<Perm>& gens) {
  UnionFind uf(n);
  for (const Perm& g : gens) {
    for (int e = 0; e < n; ++e) uf.unite(e, g[static_cast<std::size_t>(e)]);
  }
  std::vector<int> rep(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) rep[static_cast<std::size_t>(e)] = uf.find(e);
  return rep;
}

}  // namespace extset
