#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "extset/canonical.hpp"
#include "extset/core.hpp"
#include "extset/exact.hpp"

namespace extset {

/// The requested search lies outside the documented budget, or a
/// budget-limited enumeration ran out of nodes.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConstraintSet {
  int n = 0;
  int k = 0;
  int t = 1;
  bool intersecting = false;
  bool non_trivial = false;  // implies intersecting
  std::optional<int> matching_at_most;
  bool pair_mode = false;  // excludes every other flag
};

enum class Objective { MaxMinTDegree, MaxMinPairSize };

struct SearchProblem {
  ConstraintSet constraints;
  Objective objective = Objective::MaxMinTDegree;
  /// Value the optimum is compared against, such as a theorem's right side.
  std::optional<exact::BigRat> reference;
  std::string reference_label;
  /// Explicit node cap. When set, the per-(n,k) table is bypassed.
  std::optional<std::uint64_t> budget;
};

/// Throws ParameterError on inconsistent flags or sizes.
void validate_problem(const SearchProblem& problem);

enum class SearchStatus { Exact, Timeout };

std::string status_name(SearchStatus status);

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t isomorph_rejections = 0;
  std::uint64_t bound_prunes = 0;
  std::uint64_t tasks = 0;
};

struct TheoremCheck {
  std::string theorem;
  bool hypotheses_hold = false;
  exact::BigInt bound;
  bool agrees = true;  // optimum <= bound, meaningful only when hypotheses hold
};

struct SearchResult {
  SearchStatus status = SearchStatus::Exact;
  /// -1 when no feasible family was reached before a timeout.
  long long optimum = -1;
  std::optional<Family> witness;
  /// Pair mode: the partner family B = X(A) \ A of the witness A.
  std::optional<Family> partner;
  CanonicalForm witness_form;
  SearchStats stats;
  int threads = 1;
  std::uint64_t node_cap = 0;
  std::optional<exact::BigRat> reference;
  std::string reference_label;
  std::vector<TheoremCheck> theorem_checks;

  bool counterexample() const;
};

/// Called on every accepted search node with its member masks. Must be
/// thread-safe when threads > 1.
using NodeVisitor = std::function<void(std::span<const Mask>)>;

struct SearchOptions {
  int threads = 1;
  NodeVisitor visitor;
};

/// Node cap for (n,k) from the budget table, after EXTSET_BUDGET_OVERRIDE.
/// Throws BudgetExceeded outside the documented feasible sizes.
std::uint64_t budget_for(const ConstraintSet& constraints);

/// Exact maximum of the objective over all families meeting the constraints.
/// Throws ParameterError for infeasible constraints and BudgetExceeded for
/// sizes outside the table; hitting the node cap yields status Timeout.
SearchResult maximize(const SearchProblem& problem, const SearchOptions& options = {});

SearchResult maximize_min_t_degree(const SearchProblem& problem, const SearchOptions& options = {});

/// Every maximal intersecting subfamily of C([n],k), one canonical
/// representative per isomorphism class, sorted by canonical form.
/// Throws BudgetExceeded instead of truncating.
std::vector<Family> enumerate_maximal_intersecting(int n, int k, const SearchOptions& options = {},
                                                   std::optional<std::uint64_t> budget = std::nullopt);

/// Non-trivial intersecting families at n = 2k+1, t = 1, compared against
/// the minimum degree of H_k. The comparison is reported only.
SearchResult probe_problem1(int k, const SearchOptions& options = {});

/// Disjoint cross-intersecting pairs, compared against C(n-1,k-1)/2.
SearchResult probe_problem2(int n, int k, const SearchOptions& options = {});

/// Built-in problems: ekr-degree, hm-degree, emc-degree, problem1, problem2.
SearchProblem preset_problem(const std::string& name, int n, int k, std::optional<int> s, int t);

/// Theorem bounds whose hypotheses can be evaluated at the problem's parameters.
std::vector<TheoremCheck> theorem_checks(const SearchProblem& problem, long long optimum);

/// Empty when the witness satisfies every constraint and attains the optimum;
/// otherwise a description of the first violation.
std::string validate_witness(const SearchProblem& problem, const SearchResult& result);

/// Empty when A, B are disjoint, cross-intersecting and min(|A|,|B|) = value.
std::string validate_pair(const Family& a, const Family& b, long long value);

/// Canonical form of the two-colored pair, minimized over swapping A and B.
CanonicalForm pair_form(const Family& a, const Family& b);

/// All k-sets meeting every member of `fam`, excluding members of `fam`.
Family cross_partner(const Family& fam);

}  // namespace extset
