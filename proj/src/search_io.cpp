#include "extset/search_io.hpp"

#include <cstdio>

namespace extset {
namespace {

using nlohmann::json;

std::string hex_bytes(const std::string& raw) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(raw.size() * 2);
  for (unsigned char c : raw) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw ParameterError(std::string("problem: field '") + key + "' must be an integer");
  }
  return j.at(key).get<int>();
}

json params_json(const exact::ParamPoint& p) {
  json out = json::object();
  if (p.n) out["n"] = *p.n;
  if (p.k) out["k"] = *p.k;
  if (p.s) out["s"] = *p.s;
  if (p.t) out["t"] = *p.t;
  if (p.u) out["u"] = *p.u;
  return out;
}

}  // namespace

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json family_to_json(const Family& fam) {
  json sets = json::array();
  for (std::size_t i = 0; i < fam.size(); ++i) sets.push_back(fam.at(i).elements());
  return {{"n", fam.n()}, {"k", fam.k()}, {"sets", std::move(sets)}};
}

SearchProblem problem_from_json(const json& j) {
  if (!j.is_object()) throw ParameterError("problem: expected a JSON object");
  SearchProblem p;
  ConstraintSet& c = p.constraints;
  c.n = get_int(j, "n");
  c.k = get_int(j, "k");
  c.t = j.contains("t") ? get_int(j, "t") : 1;
  std::optional<int> s;
  if (j.contains("s")) s = get_int(j, "s");
  if (j.contains("constraints")) {
    const json& cs = j.at("constraints");
    if (!cs.is_array()) throw ParameterError("problem: 'constraints' must be an array of names");
    for (const json& item : cs) {
      if (!item.is_string()) throw ParameterError("problem: constraint names must be strings");
      const std::string name = item.get<std::string>();
      if (name == "intersecting") {
        c.intersecting = true;
      } else if (name == "non_trivial") {
        c.intersecting = true;
        c.non_trivial = true;
      } else if (name == "matching_at_most") {
        if (!s) throw ParameterError("problem: matching_at_most needs field 's'");
        c.matching_at_most = *s;
      } else if (name == "pair_mode") {
        c.pair_mode = true;
      } else {
        throw ParameterError("problem: unknown constraint '" + name + "'");
      }
    }
  }
  const std::string objective = j.value("objective", c.pair_mode ? "max_min_pair_size" : "max_min_t_degree");
  if (objective == "max_min_t_degree") {
    p.objective = Objective::MaxMinTDegree;
  } else if (objective == "max_min_pair_size") {
    p.objective = Objective::MaxMinPairSize;
  } else {
    throw ParameterError("problem: unknown objective '" + objective + "'");
  }
  if (j.contains("budget")) {
    const json& b = j.at("budget");
    if (!b.is_number_integer() || b.get<long long>() <= 0) {
      throw ParameterError("problem: 'budget' must be a positive integer");
    }
    p.budget = b.get<std::uint64_t>();
  }
  validate_problem(p);
  return p;
}

json problem_to_json(const SearchProblem& p) {
  const ConstraintSet& c = p.constraints;
  json cs = json::array();
  if (c.intersecting && !c.non_trivial) cs.push_back("intersecting");
  if (c.non_trivial) cs.push_back("non_trivial");
  if (c.matching_at_most) cs.push_back("matching_at_most");
  if (c.pair_mode) cs.push_back("pair_mode");
  json out = {{"n", c.n},
              {"k", c.k},
              {"t", c.t},
              {"constraints", std::move(cs)},
              {"objective", p.objective == Objective::MaxMinTDegree ? "max_min_t_degree" : "max_min_pair_size"}};
  if (c.matching_at_most) out["s"] = *c.matching_at_most;
  if (p.budget) out["budget"] = *p.budget;
  return out;
}

json result_to_json(const SearchResult& r) {
  json out = {
      {"status", status_name(r.status)},
      {"optimum", r.optimum},
      {"nodes_expanded", r.stats.nodes_expanded},
      {"isomorph_rejections", r.stats.isomorph_rejections},
      {"bound_prunes", r.stats.bound_prunes},
      {"tasks", r.stats.tasks},
      {"threads", r.threads},
      {"node_cap", r.node_cap},
      {"witness", r.witness ? family_to_json(*r.witness) : json(nullptr)},
      {"canonical_form", hex_bytes(r.witness_form.bytes())},
  };
  if (r.partner) out["partner"] = family_to_json(*r.partner);
  if (r.reference) {
    const exact::BigRat opt(r.optimum);
    std::string verdict = "not comparable";
    if (r.optimum >= 0) verdict = opt > *r.reference ? "above" : opt == *r.reference ? "equal" : "below";
    out["reference"] = {{"label", r.reference_label}, {"value", exact::to_string(*r.reference)}, {"optimum_is", verdict}};
  }
  json checks = json::array();
  for (const TheoremCheck& c : r.theorem_checks) {
    checks.push_back({{"theorem", c.theorem},
                      {"hypotheses_hold", c.hypotheses_hold},
                      {"bound", exact::to_string(c.bound)},
                      {"agrees", c.agrees}});
  }
  out["theorem_checks"] = std::move(checks);
  out["counterexample"] = r.counterexample();
  return out;
}

json claim_record_to_json(const exact::ClaimRecord& rec) {
  json out = {{"claim", std::string(exact::claim_info(rec.claim).name)},
              {"params", params_json(rec.params)},
              {"holds", rec.outcome.holds},
              {"skipped", rec.outcome.skipped},
              {"relation", rec.outcome.relation},
              {"lhs", exact::to_string(rec.outcome.lhs)},
              {"rhs", exact::to_string(rec.outcome.rhs)}};
  if (!rec.outcome.note.empty()) out["note"] = rec.outcome.note;
  return out;
}

json threshold_to_json(const exact::ThresholdResult& r) {
  return {{"claim", std::string(exact::claim_info(r.claim).name)},
          {"n_rule", r.rule.to_string()},
          {"fixed", params_json(r.fixed)},
          {"window", {r.window_lo, r.window_hi}},
          {"threshold", r.threshold},
          {"monotone", r.monotone()},
          {"holds_below", r.holds_below},
          {"out_of_regime", r.out_of_regime}};
}

}  // namespace extset
