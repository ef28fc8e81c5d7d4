#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "extset/exact.hpp"

namespace extset::exact {

enum class ClaimId {
  EQ25_IDENTITY,
  EQ04_BOUND,
  EQ07_IDENTITY,
  EQ01_BOUND,
  EQ02_PRED,
  EQ151_PRED,
  EQ05_PRED,
  EQ19_PRED,
  EQ16_PRED,
  EQ13_PRED,
  EQ10_PRED,
  EQ11_PRED,
  EQ09_PRED,
  EQ33_35_PRED,
  EQHIL_BOUND,
  KZ_EQUALS_HM_AT_U_EQ_K,
  A0_TDEGREE_FORM,
  HM_TDEGREE_FORM,
};

/// Identities must hold everywhere in their regime; a failure is a bug.
/// Inequalities are data: they hold on part of the parameter space.
enum class ClaimKind { Identity, Inequality };

struct ClaimInfo {
  ClaimId id;
  std::string_view name;    // "EQ07_IDENTITY"
  std::string_view alias;   // "EQ07"
  ClaimKind kind;
  std::string_view params;  // parameters read from a ParamPoint, e.g. "n,k,t"
  std::string_view regime;  // admissible region, human readable
  std::string_view statement;
};

const std::vector<ClaimInfo>& claim_table();
const ClaimInfo& claim_info(ClaimId id);

/// Accepts the full name or the alias, case-insensitively.
/// Throws ParameterError on an unknown id.
ClaimId parse_claim_id(std::string_view text);

struct ParamPoint {
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> s;
  std::optional<int> t;
  std::optional<int> u;

  std::string to_string() const;
};

struct ClaimRecord {
  ClaimId claim;
  ParamPoint params;
  CheckOutcome outcome;
};

/// Evaluates one claim at one point with exact arithmetic. Throws
/// ParameterError when a required parameter is missing or outside the regime.
ClaimRecord evaluate_claim(ClaimId claim, const ParamPoint& point);

bool check_case_predicates(const ParamPoint& point, ClaimId claim);

/// n = a*k + b.
struct AffineRule {
  int a = 1;
  int b = 0;

  int at(int k) const { return a * k + b; }
  std::string to_string() const;
  /// Parses "2k+5", "k-1", "3k", "7". Throws ParameterError otherwise.
  static AffineRule parse(std::string_view text);
};

struct ThresholdResult {
  ClaimId claim;
  AffineRule rule;
  ParamPoint fixed;  // parameters other than n and k
  int window_lo = 3;
  int window_hi = 200;
  int threshold = 0;
  /// k below the threshold where the claim nevertheless holds.
  std::vector<int> holds_below;
  /// k in the window where the point is outside the claim's regime.
  int out_of_regime = 0;

  bool monotone() const { return holds_below.empty(); }
};

/// Smallest k in [lo, hi] such that the claim holds at (n = rule(k), k) for
/// every k' in [k, hi]. Points outside the regime count as failures.
/// Throws ParameterError if the claim fails at k = hi.
ThresholdResult find_threshold(ClaimId claim, const AffineRule& rule, const ParamPoint& fixed,
                               int lo = 3, int hi = 200);

}  // namespace extset::exact
