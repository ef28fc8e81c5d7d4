#include "extset/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "extset/constructions.hpp"
#include "extset/invariants.hpp"

namespace extset {
namespace {

// Tree depth at which the sequential prefix hands subtrees to workers.
constexpr int kTaskDepth = 2;

// Node caps for the documented feasible sizes, keyed by (n, k). Sizes not
// listed fall back to kDefaultCap. At k = 4, n >= 8 the tree runs at a few
// thousand nodes per second, so the cap bounds a run to a few minutes.
const std::map<std::pair<int, int>, std::uint64_t>& budget_table() {
  static const std::map<std::pair<int, int>, std::uint64_t> table = {
      {{8, 4}, 1'000'000},
      {{9, 4}, 1'000'000},
  };
  return table;
}
constexpr std::uint64_t kDefaultCap = 5'000'000;

enum class Mode { Degree, Enumerate, Pair };

struct Node {
  std::vector<Mask> fam;
  std::vector<Mask> cand;  // ascending
  std::vector<Perm> gens;
  bool have_gens = false;
  std::uint64_t pair_a = 0;   // pair mode: indices of members of A
  std::uint64_t pair_x = 0;   // pair mode: indices of sets meeting every member of A
};

struct Incumbent {
  long long value = -1;
  CanonicalForm form;
  std::vector<Mask> fam;
  std::uint64_t pair_b = 0;
};

struct Local {
  SearchStats stats;
  Incumbent best;
  std::vector<CanonicalForm> maximal;  // enumeration mode
  std::vector<std::int64_t> counts;    // t-degree scratch
};

int bit_count(std::uint64_t x) { return std::popcount(x); }

class Engine {
 public:
  Engine(const SearchProblem& problem, Mode mode, std::uint64_t cap, const SearchOptions& options)
      : c_(problem.constraints),
        mode_(mode),
        cap_(cap),
        options_(options),
        indexer_(c_.n, mode == Mode::Degree ? c_.t : 0) {
    layer_ = all_ksets(c_.n, c_.k);
    if (mode_ == Mode::Pair) {
      if (layer_.size() > 64) throw ParameterError("pair mode needs C(n,k) <= 64");
      meet_.resize(layer_.size());
      for (std::size_t i = 0; i < layer_.size(); ++i) {
        for (std::size_t j = 0; j < layer_.size(); ++j) {
          if ((layer_[i] & layer_[j]) != 0) meet_[i] |= std::uint64_t{1} << j;
        }
        index_.emplace(layer_[i], static_cast<int>(i));
      }
      all_ = layer_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << layer_.size()) - 1;
    }
  }

  void seed(long long value) { incumbent_.store(value); }

  void run() {
    Node root = make_root();
    Local main;
    std::vector<Node> tasks;
    prefix(root, 0, tasks, main);
    main.stats.tasks = tasks.size();
    locals_.push_back(std::move(main));

    const int threads = std::max(1, options_.threads);
    std::vector<Local> workers(static_cast<std::size_t>(threads));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&](Local& local) {
      try {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
          if (timed_out_.load()) break;
          dfs(tasks[i], local);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        timed_out_.store(true);
      }
    };
    if (threads == 1) {
      work(workers[0]);
    } else {
      std::vector<std::thread> pool;
      for (int i = 0; i < threads; ++i) pool.emplace_back(work, std::ref(workers[static_cast<std::size_t>(i)]));
      for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);
    for (auto& w : workers) locals_.push_back(std::move(w));
  }

  bool timed_out() const { return timed_out_.load(); }

  SearchStats stats() const {
    SearchStats s;
    for (const Local& l : locals_) {
      s.nodes_expanded += l.stats.nodes_expanded;
      s.isomorph_rejections += l.stats.isomorph_rejections;
      s.bound_prunes += l.stats.bound_prunes;
      s.tasks += l.stats.tasks;
    }
    return s;
  }

  // Largest value, ties broken by the smallest canonical form.
  Incumbent best() const {
    Incumbent out;
    for (const Local& l : locals_) {
      const Incumbent& b = l.best;
      if (b.value < 0) continue;
      if (b.value > out.value || (b.value == out.value && b.form < out.form)) out = b;
    }
    return out;
  }

  std::vector<CanonicalForm> maximal_forms() const {
    std::vector<CanonicalForm> out;
    for (const Local& l : locals_) out.insert(out.end(), l.maximal.begin(), l.maximal.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  void pair_index_mask_to_masks(std::uint64_t idx, std::vector<Mask>& out) const {
    out.clear();
    for (std::uint64_t r = idx; r != 0; r &= r - 1) out.push_back(layer_[static_cast<std::size_t>(std::countr_zero(r))]);
  }

 private:
  Node make_root() {
    Node root;
    if (mode_ == Mode::Pair) {
      root.pair_x = all_;
      for (std::size_t j = 0; j < layer_.size(); ++j) {
        const std::uint64_t bit = std::uint64_t{1} << j;
        if (bit_count(meet_[j] & ~bit) >= 1) root.cand.push_back(layer_[j]);
      }
    } else {
      root.cand = layer_;
    }
    return root;
  }

  // Sequential expansion of the top of the tree; nodes at kTaskDepth become tasks.
  void prefix(Node& node, int depth, std::vector<Node>& tasks, Local& local) {
    if (depth == kTaskDepth) {
      tasks.push_back(std::move(node));
      return;
    }
    if (!enter(node, local)) return;
    expand(node, local, [&](Node& child) { prefix(child, depth + 1, tasks, local); });
  }

  void dfs(Node& node, Local& local) {
    if (!enter(node, local)) return;
    expand(node, local, [&](Node& child) { dfs(child, local); });
  }

  // Counts the node and handles leaves. Returns true when children should be generated.
  bool enter(const Node& node, Local& local) {
    if (timed_out_.load(std::memory_order_relaxed)) return false;
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= cap_) {
      timed_out_.store(true);
      return false;
    }
    ++local.stats.nodes_expanded;
    if (options_.visitor) options_.visitor(node.fam);
    if (node.cand.empty()) {
      leaf(node, local);
      return false;
    }
    return true;
  }

  void leaf(const Node& node, Local& local) {
    if (mode_ == Mode::Enumerate) {
      local.maximal.push_back(canonical_labeling(c_.n, c_.k, node.fam).form);
      return;
    }
    long long value = 0;
    std::uint64_t pair_b = 0;
    if (mode_ == Mode::Pair) {
      pair_b = node.pair_x & ~node.pair_a;
      value = static_cast<long long>(node.fam.size());
    } else {
      if (node.fam.empty()) return;
      if (c_.non_trivial && common(node.fam, {}) != 0) return;
      value = min_t(node.fam, {}, local);
    }
    record(value, node, pair_b, local);
  }

  void record(long long value, const Node& node, std::uint64_t pair_b, Local& local) {
    long long cur = incumbent_.load();
    if (value < cur) return;
    while (value > cur && !incumbent_.compare_exchange_weak(cur, value)) {
    }
    if (value < local.best.value) return;
    CanonicalForm form;
    if (mode_ == Mode::Pair) {
      std::vector<Mask> b;
      pair_index_mask_to_masks(pair_b, b);
      form = pair_form(Family::from_masks(c_.n, c_.k, node.fam), Family::from_masks(c_.n, c_.k, b));
    } else {
      form = canonical_labeling(c_.n, c_.k, node.fam).form;
    }
    if (value > local.best.value || form < local.best.form) {
      local.best.value = value;
      local.best.form = std::move(form);
      local.best.fam = node.fam;
      local.best.pair_b = pair_b;
    }
  }

  Mask common(const std::vector<Mask>& a, const std::vector<Mask>& b) const {
    Mask all = low_bits(c_.n);
    for (Mask m : a) all &= m;
    for (Mask m : b) all &= m;
    return all;
  }

  long long min_t(const std::vector<Mask>& a, const std::vector<Mask>& b, Local& local) const {
    local.counts.assign(indexer_.count(), 0);
    detail::add_t_degrees(a, indexer_, local.counts);
    detail::add_t_degrees(b, indexer_, local.counts);
    return *std::min_element(local.counts.begin(), local.counts.end());
  }

  // True when no descendant of `node` can reach the incumbent.
  bool prune(const Node& node, Local& local) const {
    const long long inc = incumbent_.load(std::memory_order_relaxed);
    switch (mode_) {
      case Mode::Enumerate:
        return false;
      case Mode::Pair: {
        const long long b = bit_count(node.pair_x & ~node.pair_a);
        const long long ub = std::min(b, static_cast<long long>(node.fam.size() + node.cand.size()));
        return ub < inc;
      }
      case Mode::Degree:
        if (c_.non_trivial && common(node.fam, node.cand) != 0) return true;
        return min_t(node.fam, node.cand, local) < inc;
    }
    return false;
  }

  std::vector<Mask> child_candidates(const Node& parent, Mask s) const {
    std::vector<Mask> out;
    out.reserve(parent.cand.size());
    const bool intersecting = c_.intersecting || c_.non_trivial || mode_ == Mode::Enumerate;
    if (intersecting) {
      for (Mask t : parent.cand) {
        if (t != s && (t & s) != 0) out.push_back(t);
      }
    } else if (c_.matching_at_most) {
      const int need = *c_.matching_at_most - 1;
      std::vector<Mask> avoid;
      for (Mask t : parent.cand) {
        if (t == s) continue;
        if ((t & s) != 0) {
          out.push_back(t);
          continue;
        }
        // T joins a matching only through S plus s-1 parent members avoiding S and T.
        avoid.clear();
        for (Mask f : parent.fam) {
          if ((f & (s | t)) == 0) avoid.push_back(f);
        }
        if (!detail::has_matching(avoid, c_.k, need)) out.push_back(t);
      }
    } else {
      for (Mask t : parent.cand) {
        if (t != s) out.push_back(t);
      }
    }
    return out;
  }

  void pair_child(const Node& parent, Mask s, Node& child) const {
    const int j = index_.at(s);
    child.pair_a = parent.pair_a | (std::uint64_t{1} << j);
    child.pair_x = parent.pair_x & meet_[static_cast<std::size_t>(j)];
    const long long inc = incumbent_.load(std::memory_order_relaxed);
    const long long size = static_cast<long long>(child.fam.size());
    for (Mask t : parent.cand) {
      if (t == s) continue;
      const int i = index_.at(t);
      const std::uint64_t a2 = child.pair_a | (std::uint64_t{1} << i);
      const long long b2 = bit_count(child.pair_x & meet_[static_cast<std::size_t>(i)] & ~a2);
      // Adding T keeps |A| <= |B|; supersets of A+T have |B| at most b2.
      if (b2 >= size + 1 && b2 >= inc) child.cand.push_back(t);
    }
  }

  static std::uint64_t deletion_invariant(Mask m, const int* deg) {
    std::array<int, 64> d{};
    int len = 0;
    for (Mask r = m; r != 0; r &= r - 1) d[static_cast<std::size_t>(len++)] = deg[std::countr_zero(r)];
    std::sort(d.begin(), d.begin() + len, std::greater<>());
    std::uint64_t key = 0;
    for (int i = 0; i < 4; ++i) key = (key << 16) | static_cast<std::uint64_t>(i < len ? d[static_cast<std::size_t>(i)] : 0);
    return key;
  }

  // Accept G = F + S iff S lies in the Aut(G)-orbit of the canonical deletion:
  // the set with the largest degree invariant, ties broken by canonical image.
  bool canonical_child(Node& child, Mask s) const {
    int deg[64] = {};
    for (Mask m : child.fam) {
      for (Mask r = m; r != 0; r &= r - 1) ++deg[std::countr_zero(r)];
    }
    const std::uint64_t inv_s = deletion_invariant(s, deg);
    std::uint64_t top = 0;
    int ties = 0;
    for (Mask m : child.fam) {
      const std::uint64_t v = deletion_invariant(m, deg);
      if (v > top) {
        top = v;
        ties = 1;
      } else if (v == top) {
        ++ties;
      }
    }
    if (inv_s < top) return false;
    if (ties == 1) return true;

    CanonicalLabeling lab = canonical_labeling(c_.n, c_.k, child.fam);
    Mask deletion = 0;
    Mask best_image = 0;
    bool first = true;
    for (Mask m : child.fam) {
      if (deletion_invariant(m, deg) != top) continue;
      const Mask img = permute_mask(m, lab.labeling);
      if (first || img > best_image) {
        best_image = img;
        deletion = m;
        first = false;
      }
    }
    child.gens = std::move(lab.generators);
    child.have_gens = true;
    if (deletion == s) return true;
    // Orbit of the canonical deletion under Aut(G).
    std::vector<Mask> orbit{deletion};
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const Perm& g : child.gens) {
        const Mask img = permute_mask(orbit[i], g);
        if (img == s) return true;
        if (std::find(orbit.begin(), orbit.end(), img) == orbit.end()) orbit.push_back(img);
      }
    }
    return false;
  }

  template <typename Recurse>
  void expand(Node& node, Local& local, Recurse&& recurse) {
    if (!node.have_gens) {
      node.gens = canonical_labeling(c_.n, c_.k, node.fam).generators;
      node.have_gens = true;
    }
    const std::vector<int> orbit = mask_orbits(node.cand, node.gens);
    std::vector<std::pair<long long, Mask>> order;
    if (mode_ == Mode::Degree) {
      local.counts.assign(indexer_.count(), 0);
      detail::add_t_degrees(node.fam, indexer_, local.counts);
    }
    for (std::size_t i = 0; i < node.cand.size(); ++i) {
      if (orbit[i] != static_cast<int>(i)) continue;
      const Mask s = node.cand[i];
      long long key = 0;
      if (mode_ == Mode::Degree) {
        key = std::numeric_limits<long long>::max();
        indexer_.for_each_subset_rank(s, [&](std::uint64_t r) { key = std::min<long long>(key, local.counts[r]); });
      }
      order.emplace_back(key, s);
    }
    std::sort(order.begin(), order.end());

    for (const auto& [key, s] : order) {
      if (timed_out_.load(std::memory_order_relaxed)) return;
      Node child;
      child.fam = node.fam;
      child.fam.push_back(s);
      if (mode_ == Mode::Pair) {
        pair_child(node, s, child);
      } else {
        child.cand = child_candidates(node, s);
      }
      if (prune(child, local)) {
        ++local.stats.bound_prunes;
        continue;
      }
      if (!canonical_child(child, s)) {
        ++local.stats.isomorph_rejections;
        continue;
      }
      recurse(child);
    }
  }

  ConstraintSet c_;
  Mode mode_;
  std::uint64_t cap_;
  SearchOptions options_;
  TSetIndexer indexer_;
  std::vector<Mask> layer_;
  std::vector<std::uint64_t> meet_;
  std::unordered_map<Mask, int> index_;
  std::uint64_t all_ = 0;

  std::atomic<long long> incumbent_{-1};
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> timed_out_{false};
  std::vector<Local> locals_;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

bool in_feasible_region(const ConstraintSet& c) {
  if (c.pair_mode) return c.k <= 3 && c.n <= 8;
  return c.k <= 4 && c.n <= 9;
}

std::optional<std::uint64_t> env_override() {
  const char* raw = std::getenv("EXTSET_BUDGET_OVERRIDE");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') throw ParameterError("EXTSET_BUDGET_OVERRIDE must be a positive integer");
  return static_cast<std::uint64_t>(v);
}

// Value of a known feasible construction, used to seed the incumbent.
long long seed_value(const ConstraintSet& c) {
  if (c.pair_mode) return -1;
  Family fam = full_layer(c.n, c.k);
  if (c.non_trivial) {
    if (c.k < 2 || 2 * c.k > c.n) return -1;
    fam = hilton_milner(c.n, c.k, c.k);
    if (is_trivial(fam)) return -1;
  } else if (c.intersecting) {
    fam = star(c.n, c.k, 1);
  } else if (c.matching_at_most) {
    if (*c.matching_at_most >= c.n) return -1;
    fam = a0(c.n, c.k, *c.matching_at_most);
    if (matching_number(fam) > *c.matching_at_most) return -1;
  }
  if (fam.empty()) return -1;
  if (c.intersecting && !is_intersecting(fam)) return -1;
  return min_t_degree(fam, c.t).min_degree;
}

}  // namespace

std::string status_name(SearchStatus status) { return status == SearchStatus::Exact ? "exact" : "timeout"; }

bool SearchResult::counterexample() const {
  return std::any_of(theorem_checks.begin(), theorem_checks.end(),
                     [](const TheoremCheck& c) { return c.hypotheses_hold && !c.agrees; });
}

void validate_problem(const SearchProblem& p) {
  const ConstraintSet& c = p.constraints;
  require(c.n >= 1 && c.n <= kCanonicalMaxGround, "search: need 1 <= n <= 16");
  require(c.k >= 1 && c.k <= c.n, "search: need 1 <= k <= n");
  if (c.pair_mode) {
    require(!c.intersecting && !c.non_trivial && !c.matching_at_most,
            "search: pair_mode excludes intersecting, non_trivial and matching_at_most");
    require(p.objective == Objective::MaxMinPairSize, "search: pair_mode needs objective max_min_pair_size");
    require(small_binom(c.n, c.k) <= 64, "search: pair_mode needs C(n,k) <= 64");
    return;
  }
  require(p.objective == Objective::MaxMinTDegree, "search: objective max_min_pair_size needs pair_mode");
  require(c.t >= 1 && c.t < c.k, "search: need 1 <= t < k");
  if (c.matching_at_most) require(*c.matching_at_most >= 1, "search: matching_at_most needs s >= 1");
  if (c.non_trivial && c.k == 1) {
    throw ParameterError("search: no non-trivial intersecting family of 1-sets exists");
  }
}

std::uint64_t budget_for(const ConstraintSet& c) {
  if (!in_feasible_region(c)) {
    throw BudgetExceeded("search: (n,k) = (" + std::to_string(c.n) + "," + std::to_string(c.k) +
                         ") is outside the documented budget (k <= 4 and n <= 9; pair mode k <= 3 and n <= 8)");
  }
  if (auto v = env_override()) return *v;
  const auto& table = budget_table();
  const auto it = table.find({c.n, c.k});
  return it == table.end() ? kDefaultCap : it->second;
}

SearchResult maximize(const SearchProblem& problem, const SearchOptions& options) {
  validate_problem(problem);
  const ConstraintSet& c = problem.constraints;
  const bool nt = c.non_trivial;
  ConstraintSet normalized = c;
  if (nt) normalized.intersecting = true;
  SearchProblem p = problem;
  p.constraints = normalized;

  const std::uint64_t cap = problem.budget ? *problem.budget : budget_for(c);
  Engine engine(p, c.pair_mode ? Mode::Pair : Mode::Degree, cap, options);
  engine.seed(seed_value(normalized));
  engine.run();

  SearchResult res;
  res.status = engine.timed_out() ? SearchStatus::Timeout : SearchStatus::Exact;
  res.stats = engine.stats();
  res.threads = std::max(1, options.threads);
  res.node_cap = cap;
  res.reference = problem.reference;
  res.reference_label = problem.reference_label;
  const Incumbent best = engine.best();
  if (best.value < 0) {
    if (res.status == SearchStatus::Exact) throw ParameterError("search: no family satisfies the constraints");
    return res;
  }
  res.optimum = best.value;
  res.witness_form = best.form;
  if (c.pair_mode) {
    // The witness is the relabeled pair behind the swap-normalized form.
    std::vector<Mask> a, b;
    for (std::uint64_t e : best.form.entries) ((e >> 32) == 0 ? a : b).push_back(e & 0xffffffffULL);
    res.witness = Family::from_masks(c.n, c.k, std::move(a));
    res.partner = Family::from_masks(c.n, c.k, std::move(b));
  } else {
    res.witness = family_from_form(best.form);
  }
  if (res.status == SearchStatus::Exact) res.theorem_checks = theorem_checks(p, res.optimum);
  return res;
}

SearchResult maximize_min_t_degree(const SearchProblem& problem, const SearchOptions& options) {
  require(problem.objective == Objective::MaxMinTDegree, "maximize_min_t_degree: objective must be max_min_t_degree");
  return maximize(problem, options);
}

std::vector<Family> enumerate_maximal_intersecting(int n, int k, const SearchOptions& options,
                                                   std::optional<std::uint64_t> budget) {
  SearchProblem p;
  p.constraints.n = n;
  p.constraints.k = k;
  p.constraints.t = 1;
  p.constraints.intersecting = true;
  require(n >= 1 && n <= kCanonicalMaxGround, "enumerate: need 1 <= n <= 16");
  require(k >= 1 && k <= n, "enumerate: need 1 <= k <= n");
  const std::uint64_t cap = budget ? *budget : budget_for(p.constraints);
  Engine engine(p, Mode::Enumerate, cap, options);
  engine.run();
  if (engine.timed_out()) {
    throw BudgetExceeded("enumerate_maximal_intersecting: node cap " + std::to_string(cap) +
                         " exhausted; refusing to return a partial list");
  }
  std::vector<Family> out;
  for (const CanonicalForm& f : engine.maximal_forms()) out.push_back(family_from_form(f));
  return out;
}

SearchProblem preset_problem(const std::string& name, int n, int k, std::optional<int> s, int t) {
  SearchProblem p;
  ConstraintSet& c = p.constraints;
  c.n = n;
  c.k = k;
  c.t = t;
  if (name == "ekr-degree") {
    c.intersecting = true;
    p.reference = exact::BigRat(exact::binom(n - t - 1, k - t - 1));
    p.reference_label = "C(n-t-1,k-t-1)";
  } else if (name == "hm-degree") {
    c.intersecting = true;
    c.non_trivial = true;
    if (t >= 1 && t < k && n >= 2 * k + 1) {
      p.reference = exact::BigRat(exact::hm_t_degree_bound(n, k, t));
      p.reference_label = "C(n-t-1,k-t-1)-C(n-t-k-1,k-t-1)";
    }
  } else if (name == "emc-degree") {
    require(s.has_value(), "emc-degree needs s");
    c.matching_at_most = *s;
    if (t >= 1 && t <= k && *s >= 1) {
      p.reference = exact::BigRat(exact::a0_t_degree(n, k, *s, t));
      p.reference_label = "delta_t(A0(n,k,s))";
    }
  } else if (name == "problem1") {
    require(n == 2 * k + 1, "problem1 fixes n = 2k + 1");
    require(t == 1, "problem1 fixes t = 1");
    c.intersecting = true;
    c.non_trivial = true;
    p.reference = exact::BigRat(exact::binom(n - 2, k - 2) - exact::binom(n - k - 2, k - 2));
    p.reference_label = "delta(H_k) = C(n-2,k-2)-C(n-k-2,k-2)";
  } else if (name == "problem2") {
    c.pair_mode = true;
    c.t = 1;
    p.objective = Objective::MaxMinPairSize;
    p.reference = exact::BigRat(exact::binom(n - 1, k - 1), 2);
    p.reference_label = "C(n-1,k-1)/2";
  } else {
    throw ParameterError("unknown preset '" + name + "'");
  }
  return p;
}

SearchResult probe_problem1(int k, const SearchOptions& options) {
  require(k >= 2, "probe_problem1: need k >= 2");
  return maximize(preset_problem("problem1", 2 * k + 1, k, std::nullopt, 1), options);
}

SearchResult probe_problem2(int n, int k, const SearchOptions& options) {
  return maximize(preset_problem("problem2", n, k, std::nullopt, 1), options);
}

std::vector<TheoremCheck> theorem_checks(const SearchProblem& problem, long long optimum) {
  const ConstraintSet& c = problem.constraints;
  std::vector<TheoremCheck> out;
  if (c.pair_mode) return out;
  const int n = c.n, k = c.k, t = c.t;
  auto add = [&](std::string name, bool hyp, exact::BigInt bound) {
    TheoremCheck tc;
    tc.theorem = std::move(name);
    tc.hypotheses_hold = hyp;
    tc.bound = std::move(bound);
    tc.agrees = !hyp || exact::BigInt(optimum) <= tc.bound;
    out.push_back(std::move(tc));
  };
  if (c.intersecting || c.non_trivial) {
    if (t == 1) add("intersecting, n > 2k: delta <= C(n-2,k-2)", n > 2 * k, exact::binom(n - 2, k - 2));
    const bool wide = (t == 1 && n >= 2 * k + 2) ||
                      static_cast<long long>(n) * (k - t) >= 2LL * k * k + static_cast<long long>(k) * t;
    add("intersecting, n >= 2k + 3t/(1-t/k): delta_t <= C(n-t-1,k-t-1)", wide, exact::binom(n - t - 1, k - t - 1));
  }
  if (c.non_trivial) {
    const bool hyp = (t == 1 && n >= 2 * k + 5 && k >= 30) || (t > 1 && 4 * t <= k - 8 && n >= 2 * k + 14 * t);
    add("non-trivial intersecting: delta_t <= C(n-t-1,k-t-1)-C(n-t-k-1,k-t-1)", hyp,
        exact::binom(n - t - 1, k - t - 1) - exact::binom(n - t - k - 1, k - t - 1));
  }
  if (c.matching_at_most && !c.intersecting) {
    const int s = *c.matching_at_most;
    const bool hyp = n >= 2 * k * k && (t == 1 ? k >= 3 * s : k >= 5 * s * t);
    add("nu <= s, n >= 2k^2, k >= 5st (3s for t = 1): delta_t <= delta_t(A0(n,k,s))", hyp,
        exact::a0_t_degree(n, k, s, t));
  }
  return out;
}

std::string validate_pair(const Family& a, const Family& b, long long value) {
  if (a.n() != b.n() || a.k() != b.k()) return "pair families have different (n,k)";
  for (Mask m : a.masks()) {
    if (b.contains(m)) {
      std::string elems;
      for (int e : KSet::from_mask(m, a.n()).elements()) elems += (elems.empty() ? "" : " ") + std::to_string(e);
      return "A and B share the member {" + elems + "}";
    }
  }
  if (!are_cross_intersecting(a, b)) return "A and B are not cross-intersecting";
  const long long got = static_cast<long long>(std::min(a.size(), b.size()));
  if (got != value) return "min(|A|,|B|) = " + std::to_string(got) + ", expected " + std::to_string(value);
  return {};
}

std::string validate_witness(const SearchProblem& problem, const SearchResult& result) {
  const ConstraintSet& c = problem.constraints;
  if (!result.witness) return "no witness";
  const Family& w = *result.witness;
  if (w.n() != c.n || w.k() != c.k) return "witness has the wrong (n,k)";
  if (canonical_form(w) != result.witness_form && !c.pair_mode) return "witness does not match its canonical form";
  if (c.pair_mode) {
    if (!result.partner) return "pair witness lacks its partner";
    if (pair_form(w, *result.partner) != result.witness_form) return "pair witness does not match its canonical form";
    return validate_pair(w, *result.partner, result.optimum);
  }
  if (w.empty()) return "witness is empty";
  if ((c.intersecting || c.non_trivial) && !is_intersecting(w)) return "witness is not intersecting";
  if (c.non_trivial && is_trivial(w)) return "witness is trivial";
  if (c.matching_at_most && matching_number(w) > *c.matching_at_most) return "witness has matching number above s";
  const long long got = min_t_degree(w, c.t).min_degree;
  if (got != result.optimum) {
    return "witness min t-degree " + std::to_string(got) + " differs from optimum " + std::to_string(result.optimum);
  }
  return {};
}

CanonicalForm pair_form(const Family& a, const Family& b) {
  std::vector<Mask> sets(a.masks().begin(), a.masks().end());
  sets.insert(sets.end(), b.masks().begin(), b.masks().end());
  std::vector<int> colors(sets.size(), 0);
  std::vector<int> swapped(sets.size(), 1);
  for (std::size_t i = a.size(); i < sets.size(); ++i) {
    colors[i] = 1;
    swapped[i] = 0;
  }
  CanonicalForm x = canonical_labeling(a.n(), a.k(), sets, colors).form;
  CanonicalForm y = canonical_labeling(a.n(), a.k(), sets, swapped).form;
  return std::min(x, y);
}

Family cross_partner(const Family& fam) {
  std::vector<Mask> out;
  for (Mask m : all_ksets(fam.n(), fam.k())) {
    if (fam.contains(m)) continue;
    bool ok = true;
    for (Mask f : fam.masks()) {
      if ((f & m) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(m);
  }
  return Family::from_masks(fam.n(), fam.k(), std::move(out));
}

}  // namespace extset
