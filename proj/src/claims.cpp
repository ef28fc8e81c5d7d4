#include "extset/claims.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <regex>

#include "extset/constructions.hpp"
#include "extset/invariants.hpp"

namespace extset::exact {
namespace {

// Enumeration-backed claims build C([n],k) explicitly.
constexpr int kEnumerationMaxN = 20;

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

int need(const std::optional<int>& v, const char* name, ClaimId id) {
  if (!v) throw ParameterError(std::string(claim_info(id).name) + ": parameter " + name + " is required");
  return *v;
}

BigRat q(long long num, long long den = 1) { return BigRat(BigInt(num), BigInt(den)); }

BigRat q(const BigInt& x) { return BigRat(x); }

CheckOutcome compare(BigRat lhs, BigRat rhs, std::string relation) {
  CheckOutcome out;
  if (relation == "==") out.holds = lhs == rhs;
  else if (relation == "<=") out.holds = lhs <= rhs;
  else if (relation == ">=") out.holds = lhs >= rhs;
  else if (relation == "<") out.holds = lhs < rhs;
  else out.holds = lhs > rhs;
  out.lhs = std::move(lhs);
  out.rhs = std::move(rhs);
  out.relation = std::move(relation);
  return out;
}

void require_t(int k, int t, const char* who) {
  require(t >= 1 && t < k, std::string(who) + ": need 1 <= t < k");
}

void require_wide(int n, int k, const char* who) {
  require(k >= 2 && n >= 2 * k + 1, std::string(who) + ": need k >= 2 and n >= 2k + 1");
}

// prod_{i=1}^{k} (n-k+1-i)/(n-t-i)
BigRat p_product(int n, int k, int t) { return hm_product(n, k, t); }

CheckOutcome eq04_any_u(int n, int k, const std::optional<int>& u) {
  if (u) return eq04_chain(n, k, *u);
  CheckOutcome worst;
  bool have = false;
  std::string failures;
  for (int v = 3; v <= k; ++v) {
    CheckOutcome c = eq04_chain(n, k, v);
    if (c.skipped) continue;
    if (!c.holds) failures += (failures.empty() ? "" : ",") + std::to_string(v);
    if (!have || c.lhs > worst.lhs) {
      worst = c;
      worst.note = "largest ratio at u = " + std::to_string(v);
      have = true;
    }
  }
  require(k >= 3, "EQ04_BOUND: need k >= 3");
  if (!have) {
    worst.skipped = true;
    worst.holds = true;
    worst.relation = "<=";
    worst.note = "every u gives a zero denominator";
    return worst;
  }
  worst.holds = failures.empty();
  if (!worst.holds) worst.note += "; fails at u in {" + failures + "}";
  return worst;
}

CheckOutcome eval_eq01(int n, int k, int u) {
  require(n <= kEnumerationMaxN, "EQ01_BOUND: enumeration needs n <= 20");
  const BigInt bound = kz_bound(n, k, u);
  const Family h = hilton_milner(n, k, u);
  CheckOutcome out = compare(q(bound), q(static_cast<long long>(h.size())), "==");
  const BigInt gamma_expected = binom(n - u - 1, n - k - 1);
  const BigInt gamma_actual = diversity(h).gamma;
  if (gamma_actual != gamma_expected) {
    out.holds = false;
    out.note = "gamma(H_u) = " + gamma_actual.str() + ", expected " + gamma_expected.str();
  }
  return out;
}

CheckOutcome eval_eq02(int n, int k, int t) {
  require_t(k, t, "EQ02_PRED");
  require(n >= k + 1, "EQ02_PRED: need n >= k + 1");
  // Averaging step: C(k-1,t)/C(n-1,t) * C(n-1,k-1) collapses to C(n-t-1,k-t-1);
  // the weight k/(k-t) comes from C(k,t) = k/(k-t) * C(k-1,t).
  const BigRat averaged = ratio(binom(k - 1, t) * binom(n - 1, k - 1), binom(n - 1, t));
  CheckOutcome out = compare(averaged, q(binom(n - t - 1, k - t - 1)), "==");
  if (binom(k, t) * (k - t) != binom(k - 1, t) * k) {
    out.holds = false;
    out.note = "C(k,t)(k-t) != k C(k-1,t)";
  }
  return out;
}

CheckOutcome eval_eq151(int n, int k, int t) {
  require(k >= 3, "EQ151_PRED: need k >= 3");
  require_t(k, t, "EQ151_PRED");
  require_wide(n, k, "EQ151_PRED");
  CheckOutcome out = compare(q(k, k - t), q(n - k - 2, k - 2), "<=");
  const bool equivalent = q(t, k - t) <= q(n - 2 * k, k - 2);
  if (equivalent != out.holds) {
    out.holds = false;
    out.note = "equivalent form t/(k-t) <= (n-2k)/(k-2) disagrees";
  }
  return out;
}

CheckOutcome eval_eq05(int n, int k, int t) {
  require_t(k, t, "EQ05_PRED");
  require(n >= k + 3, "EQ05_PRED: need n >= k + 3");
  const BigRat lhs = q(static_cast<long long>(k) * (k - 1) * (3LL * n - 2 * k - 2),
                       static_cast<long long>(n) * (n - 1) * (n - 2));
  return compare(lhs, q(k - t, n - t), "<=");
}

CheckOutcome eval_eq19(int n, int k, int t) {
  require_t(k, t, "EQ19_PRED");
  require_wide(n, k, "EQ19_PRED");
  const BigInt rhs = binom(k, t) * (binom(n - k - 1, t) + binom(n - k + t + 1, t + 2));
  return compare(q(binom(n - k - 2, k - 2)), q(rhs), ">=");
}

CheckOutcome eval_eq16(int n, int k, int t) {
  require_t(k, t, "EQ16_PRED");
  require_wide(n, k, "EQ16_PRED");
  const BigRat lhs = q(1) - q(static_cast<long long>(k) * (k - 1) * (k - 2),
                             static_cast<long long>(k - t) * (n - k - 1) * (n - k - 2));
  return compare(lhs, q(1) - q(k, n - k + 1), ">=");
}

BigRat eq13_lhs(int n, int k, int t, int u) {
  return q(binom(n - u - 1, k - 1)) - q(k, k - t) * q(binom(n - u - 1, n - k - 1)) -
         p_product(n, k, t) * q(binom(n - 1, k - 1));
}

CheckOutcome eval_eq13(int n, int k, int t, const std::optional<int>& u) {
  require(t >= 1 && k >= t + 5, "EQ13_PRED: need t >= 1 and k >= t + 5");
  require_wide(n, k, "EQ13_PRED");
  if (u) {
    require(*u >= 3 && *u <= k - t - 2, "EQ13_PRED: need 3 <= u <= k - t - 2");
    return compare(eq13_lhs(n, k, t, *u), q(0), ">=");
  }
  int worst_u = 3;
  BigRat worst = eq13_lhs(n, k, t, 3);
  for (int v = 4; v <= k - t - 2; ++v) {
    BigRat val = eq13_lhs(n, k, t, v);
    if (val < worst) {
      worst = std::move(val);
      worst_u = v;
    }
  }
  CheckOutcome out = compare(worst, q(0), ">=");
  out.note = "minimum over u at u = " + std::to_string(worst_u);
  return out;
}

CheckOutcome eval_eq10(int n, int k, int t) {
  require_t(k, t, "EQ10_PRED");
  require_wide(n, k, "EQ10_PRED");
  const BigRat a = q(1) - q(2LL * k + 6LL * t, n);
  const BigRat b = q(1) - q(k, n);
  const int g = std::gcd(3 * k, 4);
  const int p = 3 * k / g;
  const int qq = 4 / g;
  CheckOutcome out;
  out.relation = ">=";
  out.note = "compared as lhs^" + std::to_string(qq) + " >= (1-k/n)^" + std::to_string(p);
  if (a < 0) {
    // A negative left side cannot dominate a positive power.
    out.lhs = a;
    out.rhs = pow(b, static_cast<unsigned>(p));
    out.holds = false;
    out.note = "left side negative";
    return out;
  }
  out.lhs = pow(a, static_cast<unsigned>(qq));
  out.rhs = pow(b, static_cast<unsigned>(p));
  out.holds = out.lhs >= out.rhs;
  return out;
}

CheckOutcome eval_eq11(int n, int k, int t) {
  require_t(k, t, "EQ11_PRED");
  require_wide(n, k, "EQ11_PRED");
  const BigRat lhs = q(k - t, n - t) * (q(1) - p_product(n, k, t));
  const BigRat rhs = q(static_cast<long long>(k) * (k - 1) * (3LL * n - 2 * k - 2),
                       static_cast<long long>(n) * (n - 1) * (n - 2));
  return compare(lhs, rhs, ">=");
}

CheckOutcome eval_eq09(int n, int k, const std::optional<int>& t) {
  require(!t || *t == 1, "EQ09_PRED: stated for t = 1 only");
  require_wide(n, k, "EQ09_PRED");
  BigRat prod = 1;
  for (int i = 2; i <= k; ++i) prod *= q(n - k + 1 - i, n - 1 - i);
  return compare(q(n - 2 * k - 2, n), prod, ">=");
}

CheckOutcome eval_eq33_35(int n, int k, int s, int t) {
  require(s >= 1, "EQ33_35_PRED: need s >= 1");
  require_t(k, t, "EQ33_35_PRED");
  require(n >= s + t + 2 * s * t, "EQ33_35_PRED: hypothesis n >= s + t + 2st fails");
  require(n >= s + k + 2 * k * (k - 1), "EQ33_35_PRED: hypothesis n >= s + k + 2k(k-1) fails");
  BigRat prod = 1;
  for (int i = 0; i < t; ++i) prod *= q(n - i, n - s - i);
  CheckOutcome out = compare(prod - 1, q(2LL * t * s, n - s - t), "<=");
  const BigRat ratio_lhs = ratio(binom(n - s - k, k - 1), binom(n - s, k));
  const bool second = ratio_lhs > q(k, 2LL * (n - s - t));
  if (!second) {
    out.holds = false;
    out.note = "C(n-s-k,k-1)/C(n-s,k) = " + to_string(ratio_lhs) + " does not exceed k/(2(n-s-t))";
  }
  return out;
}

CheckOutcome eval_eqhil(const ParamPoint& p) {
  const int k = need(p.k, "k", ClaimId::EQHIL_BOUND);
  const int s = need(p.s, "s", ClaimId::EQHIL_BOUND);
  const int u = need(p.u, "u", ClaimId::EQHIL_BOUND);
  require(s >= 2 && k >= 2 && u >= s + 1, "EQHIL_BOUND: need s, k >= 2 and u >= s + 1");
  const int n = p.n ? *p.n : emc_ground_size(k, s, u);
  const EmcBound bound = emc_size_bound(n, k, s, u);
  const BigRat plain = q(binom(n, k) - binom(n - s, k));
  CheckOutcome out = compare(bound.value, plain, u > s + 1 ? "<" : "==");
  out.note = "floor " + bound.floor.str();
  return out;
}

CheckOutcome eval_kz_hm(int n, int k) {
  require(k >= 3 && n > 2 * k, "KZ_EQUALS_HM_AT_U_EQ_K: need k >= 3 and n > 2k");
  return compare(q(kz_bound(n, k, k)), q(binom(n - 1, k - 1) - binom(n - k - 1, k - 1) + 1), "==");
}

CheckOutcome eval_a0_form(int n, int k, int s, int t) {
  require(n <= kEnumerationMaxN, "A0_TDEGREE_FORM: enumeration needs n <= 20");
  require(t >= 1 && t <= k && k <= n, "A0_TDEGREE_FORM: need 1 <= t <= k <= n");
  require(s >= 1 && s <= n - 1, "A0_TDEGREE_FORM: need 1 <= s <= n - 1");
  const Family fam = a0(n, k, s);
  return compare(q(a0_t_degree(n, k, s, t)), q(min_t_degree(fam, t).min_degree), "==");
}

CheckOutcome eval_hm_form(int n, int k, int t) {
  require(n <= kEnumerationMaxN, "HM_TDEGREE_FORM: enumeration needs n <= 20");
  require_t(k, t, "HM_TDEGREE_FORM");
  require_wide(n, k, "HM_TDEGREE_FORM");
  const Family fam = hilton_milner(n, k, k);
  return compare(q(hm_t_degree_bound(n, k, t)), q(min_t_degree(fam, t).min_degree), "==");
}

std::string upper(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

const std::vector<ClaimInfo>& claim_table() {
  using K = ClaimKind;
  static const std::vector<ClaimInfo> table = {
      {ClaimId::EQ25_IDENTITY, "EQ25_IDENTITY", "EQ25", K::Identity, "n,k", "k >= 3, n >= k + 3",
       "C(n-1,k-1)-C(n-4,k-1)+C(n-4,k-3) = C(n-2,k-2)+2C(n-3,k-2) = (1+2(n-k)/(n-2))C(n-2,k-2) = "
       "k(k-1)(3n-2k-2)/(n(n-1)(n-2)) C(n,k)"},
      {ClaimId::EQ04_BOUND, "EQ04_BOUND", "EQ04", K::Inequality, "n,k,[u]",
       "n >= 2k + 2, 3 <= u <= k (all u when absent)",
       "C(n-u-1,n-k-1)/C(n-u-1,k-1) <= prod_{i=k}^{n-k-1}(n-3-i)/(n-1-i) <= (k-1)(k-2)/((n-k-1)(n-k-2))"},
      {ClaimId::EQ07_IDENTITY, "EQ07_IDENTITY", "EQ07", K::Identity, "n,k,t", "1 <= t < k, n >= 2k + 1",
       "C(n-t-k-1,k-t-1)/C(n-t-1,k-t-1) = prod_{i=1}^{k}(n-k+1-i)/(n-t-i)"},
      {ClaimId::EQ01_BOUND, "EQ01_BOUND", "EQ01", K::Identity, "n,k,u", "n > 2k > 0, 3 <= u <= k, n <= 20",
       "C(n-1,k-1)+C(n-u-1,n-k-1)-C(n-u-1,k-1) = |H_u| and gamma(H_u) = C(n-u-1,n-k-1)"},
      {ClaimId::EQ02_PRED, "EQ02_PRED", "EQ02", K::Identity, "n,k,t", "1 <= t < k, n >= k + 1",
       "C(k-1,t)C(n-1,k-1)/C(n-1,t) = C(n-t-1,k-t-1) and C(k,t)(k-t) = kC(k-1,t)"},
      {ClaimId::EQ151_PRED, "EQ151_PRED", "EQ151", K::Inequality, "n,k,t", "k >= 3, 1 <= t < k, n >= 2k + 1",
       "k/(k-t) <= (n-k-2)/(k-2)"},
      {ClaimId::EQ05_PRED, "EQ05_PRED", "EQ05", K::Inequality, "n,k,t", "1 <= t < k, n >= k + 3",
       "k(k-1)(3n-2k-2)/(n(n-1)(n-2)) <= (k-t)/(n-t)"},
      {ClaimId::EQ19_PRED, "EQ19_PRED", "EQ19", K::Inequality, "n,k,t", "1 <= t < k, n >= 2k + 1",
       "C(n-k-2,k-2) >= C(k,t)(C(n-k-1,t)+C(n-k+t+1,t+2))"},
      {ClaimId::EQ16_PRED, "EQ16_PRED", "EQ16", K::Inequality, "n,k,t", "1 <= t < k, n >= 2k + 1",
       "1 - k(k-1)(k-2)/((k-t)(n-k-1)(n-k-2)) >= 1 - k/(n-k+1)"},
      {ClaimId::EQ13_PRED, "EQ13_PRED", "EQ13", K::Inequality, "n,k,t,[u]",
       "k >= t + 5, n >= 2k + 1, 3 <= u <= k - t - 2 (minimum over u when absent)",
       "C(n-u-1,k-1) - k/(k-t) C(n-u-1,n-k-1) - prod_{i=1}^{k}(n-k+1-i)/(n-t-i) C(n-1,k-1) >= 0"},
      {ClaimId::EQ10_PRED, "EQ10_PRED", "EQ10", K::Inequality, "n,k,t", "1 <= t < k, n >= 2k + 1",
       "1 - (2k+6t)/n >= (1-k/n)^(3k/4)"},
      {ClaimId::EQ11_PRED, "EQ11_PRED", "EQ11", K::Inequality, "n,k,t", "1 <= t < k, n >= 2k + 1",
       "(k-t)/(n-t) (1 - prod_{i=1}^{k}(n-k+1-i)/(n-t-i)) >= k(k-1)(3n-2k-2)/(n(n-1)(n-2))"},
      {ClaimId::EQ09_PRED, "EQ09_PRED", "EQ09", K::Inequality, "n,k", "t = 1, k >= 2, n >= 2k + 1",
       "(n-2k-2)/n >= prod_{i=2}^{k}(n-k+1-i)/(n-1-i)"},
      {ClaimId::EQ33_35_PRED, "EQ33_35_PRED", "EQ33_35", K::Inequality, "n,k,s,t",
       "s >= 1, 1 <= t < k, n >= s + t + 2st, n >= s + k + 2k(k-1)",
       "prod_{i=0}^{t-1}(n-i)/(n-s-i) - 1 <= 2ts/(n-s-t) and C(n-s-k,k-1)/C(n-s,k) > k/(2(n-s-t))"},
      {ClaimId::EQHIL_BOUND, "EQHIL_BOUND", "EQHIL", K::Identity, "k,s,u,[n]",
       "s, k >= 2, u >= s + 1, n = (u+s-1)(k-1)+s+k",
       "C(n,k)-C(n-s,k)-(u-s-1)/u C(n-s-k,k-1) <= C(n,k)-C(n-s,k), strict iff u > s + 1"},
      {ClaimId::KZ_EQUALS_HM_AT_U_EQ_K, "KZ_EQUALS_HM_AT_U_EQ_K", "KZHM", K::Identity, "n,k", "k >= 3, n > 2k",
       "kz_bound(n,k,k) = C(n-1,k-1) - C(n-k-1,k-1) + 1"},
      {ClaimId::A0_TDEGREE_FORM, "A0_TDEGREE_FORM", "A0T", K::Identity, "n,k,s,t",
       "1 <= t <= k <= n <= 20, 1 <= s <= n - 1", "delta_t(A0(n,k,s)) = C(n-t,k-t) - C(n-s-t,k-t)"},
      {ClaimId::HM_TDEGREE_FORM, "HM_TDEGREE_FORM", "HMT", K::Identity, "n,k,t", "1 <= t < k, 2k + 1 <= n <= 20",
       "delta_t(H_k) = C(n-t-1,k-t-1) - C(n-t-k-1,k-t-1)"},
  };
  return table;
}

const ClaimInfo& claim_info(ClaimId id) {
  for (const ClaimInfo& info : claim_table()) {
    if (info.id == id) return info;
  }
  throw ParameterError("unknown claim id");
}

ClaimId parse_claim_id(std::string_view text) {
  const std::string key = upper(text);
  for (const ClaimInfo& info : claim_table()) {
    if (key == info.name || key == info.alias) return info.id;
  }
  if (key == "EQ33" || key == "EQ34" || key == "EQ35") return ClaimId::EQ33_35_PRED;
  throw ParameterError("unknown claim id '" + std::string(text) + "'");
}

std::string ParamPoint::to_string() const {
  std::string out;
  auto add = [&out](const char* name, const std::optional<int>& v) {
    if (!v) return;
    if (!out.empty()) out += ',';
    out += name;
    out += '=';
    out += std::to_string(*v);
  };
  add("n", n);
  add("k", k);
  add("s", s);
  add("t", t);
  add("u", u);
  return out;
}

ClaimRecord evaluate_claim(ClaimId claim, const ParamPoint& p) {
  ClaimRecord rec{claim, p, {}};
  auto n = [&] { return need(p.n, "n", claim); };
  auto k = [&] { return need(p.k, "k", claim); };
  auto t = [&] { return need(p.t, "t", claim); };
  auto s = [&] { return need(p.s, "s", claim); };
  auto u = [&] { return need(p.u, "u", claim); };
  switch (claim) {
    case ClaimId::EQ25_IDENTITY:
      rec.outcome = eq25_chain(n(), k());
      break;
    case ClaimId::EQ04_BOUND:
      rec.outcome = eq04_any_u(n(), k(), p.u);
      break;
    case ClaimId::EQ07_IDENTITY:
      rec.outcome = eq07_identity(n(), k(), t());
      break;
    case ClaimId::EQ01_BOUND:
      rec.outcome = eval_eq01(n(), k(), u());
      break;
    case ClaimId::EQ02_PRED:
      rec.outcome = eval_eq02(n(), k(), t());
      break;
    case ClaimId::EQ151_PRED:
      rec.outcome = eval_eq151(n(), k(), t());
      break;
    case ClaimId::EQ05_PRED:
      rec.outcome = eval_eq05(n(), k(), t());
      break;
    case ClaimId::EQ19_PRED:
      rec.outcome = eval_eq19(n(), k(), t());
      break;
    case ClaimId::EQ16_PRED:
      rec.outcome = eval_eq16(n(), k(), t());
      break;
    case ClaimId::EQ13_PRED:
      rec.outcome = eval_eq13(n(), k(), t(), p.u);
      break;
    case ClaimId::EQ10_PRED:
      rec.outcome = eval_eq10(n(), k(), t());
      break;
    case ClaimId::EQ11_PRED:
      rec.outcome = eval_eq11(n(), k(), t());
      break;
    case ClaimId::EQ09_PRED:
      rec.outcome = eval_eq09(n(), k(), p.t);
      break;
    case ClaimId::EQ33_35_PRED:
      rec.outcome = eval_eq33_35(n(), k(), s(), t());
      break;
    case ClaimId::EQHIL_BOUND:
      rec.outcome = eval_eqhil(p);
      break;
    case ClaimId::KZ_EQUALS_HM_AT_U_EQ_K:
      rec.outcome = eval_kz_hm(n(), k());
      break;
    case ClaimId::A0_TDEGREE_FORM:
      rec.outcome = eval_a0_form(n(), k(), s(), t());
      break;
    case ClaimId::HM_TDEGREE_FORM:
      rec.outcome = eval_hm_form(n(), k(), t());
      break;
  }
  return rec;
}

bool check_case_predicates(const ParamPoint& point, ClaimId claim) {
  return evaluate_claim(claim, point).outcome.holds;
}

std::string AffineRule::to_string() const {
  std::string out;
  if (a != 0) {
    out = (a == 1 ? "" : a == -1 ? "-" : std::to_string(a)) + "k";
    if (b > 0) out += "+" + std::to_string(b);
    else if (b < 0) out += std::to_string(b);
  } else {
    out = std::to_string(b);
  }
  return out;
}

AffineRule AffineRule::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  static const std::regex with_k(R"(^([+-]?\d*)\*?k([+-]\d+)?$)");
  static const std::regex constant(R"(^([+-]?\d+)$)");
  std::smatch m;
  AffineRule rule;
  if (std::regex_match(s, m, with_k)) {
    const std::string coef = m[1].str();
    rule.a = coef.empty() || coef == "+" ? 1 : coef == "-" ? -1 : std::stoi(coef);
    rule.b = m[2].matched ? std::stoi(m[2].str()) : 0;
    return rule;
  }
  if (std::regex_match(s, m, constant)) {
    rule.a = 0;
    rule.b = std::stoi(m[1].str());
    return rule;
  }
  throw ParameterError("cannot parse affine rule '" + std::string(text) + "'; expected a form like 2k+5");
}

ThresholdResult find_threshold(ClaimId claim, const AffineRule& rule, const ParamPoint& fixed, int lo, int hi) {
  require(lo >= 1 && lo <= hi, "find_threshold: need 1 <= lo <= hi");
  ThresholdResult res;
  res.claim = claim;
  res.rule = rule;
  res.fixed = fixed;
  res.fixed.n.reset();
  res.fixed.k.reset();
  res.window_lo = lo;
  res.window_hi = hi;

  std::vector<bool> holds(static_cast<std::size_t>(hi - lo + 1), false);
  for (int k = lo; k <= hi; ++k) {
    ParamPoint p = res.fixed;
    p.k = k;
    p.n = rule.at(k);
    try {
      holds[static_cast<std::size_t>(k - lo)] = evaluate_claim(claim, p).outcome.holds;
    } catch (const ParameterError&) {
      ++res.out_of_regime;
    }
  }
  if (!holds.back()) {
    throw ParameterError(std::string(claim_info(claim).name) + " does not hold at k = " + std::to_string(hi) +
                         " along n = " + rule.to_string() + "; no threshold in the window");
  }
  int threshold = hi;
  while (threshold > lo && holds[static_cast<std::size_t>(threshold - 1 - lo)]) --threshold;
  res.threshold = threshold;
  for (int k = lo; k < threshold; ++k) {
    if (holds[static_cast<std::size_t>(k - lo)]) res.holds_below.push_back(k);
  }
  return res;
}

}  // namespace extset::exact
