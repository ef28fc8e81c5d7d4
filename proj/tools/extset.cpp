// Command-line front end: construct, check-family, verify, thresholds, search.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "extset/claims.hpp"
#include "extset/constructions.hpp"
#include "extset/family_io.hpp"
#include "extset/invariants.hpp"
#include "extset/search.hpp"
#include "extset/search_io.hpp"

#ifndef EXTSET_VERSION
#define EXTSET_VERSION "0.0.0"
#endif

namespace {

using nlohmann::json;
using namespace extset;

enum ExitCode : int { kOk = 0, kInternal = 1, kParams = 2, kParse = 3, kBudget = 4, kClaimFailure = 5 };

class Manifest {
 public:
  Manifest(std::string subcommand, json params)
      : subcommand_(std::move(subcommand)), params_(std::move(params)), start_(std::chrono::steady_clock::now()) {}

  json finish(std::string_view payload) const {
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return {{"subcommand", subcommand_},
            {"params", params_},
            {"version", EXTSET_VERSION},
            {"wall_time_s", wall},
            {"checksum", "fnv1a64:" + fnv1a_hex(payload)}};
  }

  json& params() { return params_; }

 private:
  std::string subcommand_;
  json params_;
  std::chrono::steady_clock::time_point start_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "a..b" or a single value; each end is an affine expression in k.
struct RangeSpec {
  exact::AffineRule lo;
  exact::AffineRule hi;

  static RangeSpec parse(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      auto v = exact::AffineRule::parse(text);
      return {v, v};
    }
    return {exact::AffineRule::parse(text.substr(0, dots)), exact::AffineRule::parse(text.substr(dots + 2))};
  }

  std::vector<int> values(int k) const {
    std::vector<int> out;
    for (int v = lo.at(k); v <= hi.at(k); ++v) out.push_back(v);
    return out;
  }

  bool depends_on_k() const { return lo.a != 0 || hi.a != 0; }
};

std::vector<std::optional<int>> optional_values(const std::optional<RangeSpec>& spec, int k) {
  if (!spec) return {std::nullopt};
  std::vector<std::optional<int>> out;
  for (int v : spec->values(k)) out.emplace_back(v);
  return out;
}

struct ParamUse {
  bool required = false;
  bool used = false;
};

// Reads a claim's parameter list such as "n,k,[u]".
ParamUse param_use(std::string_view params, char name) {
  ParamUse use;
  std::size_t start = 0;
  while (start <= params.size()) {
    std::size_t end = params.find(',', start);
    if (end == std::string_view::npos) end = params.size();
    std::string_view tok = params.substr(start, end - start);
    const bool optional = !tok.empty() && tok.front() == '[';
    if (optional) tok = tok.substr(1, tok.size() - 2);
    if (tok.size() == 1 && tok[0] == name) {
      use.used = true;
      use.required = !optional;
    }
    start = end + 1;
  }
  return use;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

// construct --------------------------------------------------------------

struct ConstructArgs {
  std::string name;
  int n = 0;
  int k = 0;
  std::optional<int> s;
  std::optional<int> u;
  int center = 1;
  std::string format = "text";
  std::string output;
};

int cmd_construct(const ConstructArgs& a) {
  Manifest manifest("construct", {{"name", a.name}, {"n", a.n}, {"k", a.k}, {"format", a.format}});
  ConstructionId id;
  id.n = a.n;
  id.k = a.k;
  if (a.name == "star") {
    id.tag = ConstructionTag::Star;
    id.param = a.center;
    manifest.params()["center"] = a.center;
  } else if (a.name == "hm") {
    id.tag = ConstructionTag::HiltonMilner;
    id.param = a.u.value_or(a.k);
    manifest.params()["u"] = id.param;
  } else if (a.name == "a0" || a.name == "ak") {
    id.tag = a.name == "a0" ? ConstructionTag::A0 : ConstructionTag::Ak;
    if (!a.s) throw ParameterError(a.name + " needs --s");
    id.param = *a.s;
    manifest.params()["s"] = *a.s;
  } else if (a.name == "full") {
    id.tag = ConstructionTag::FullLayer;
  } else {
    throw ParameterError("unknown construction '" + a.name + "' (expected a0, star, hm, ak or full)");
  }
  const Family fam = build(id);
  std::string payload;
  if (a.format == "json") {
    payload = format_family_json(fam);
  } else {
    payload = "# " + construction_name(id.tag) + " size: " + std::to_string(fam.size()) + "\n" + format_family_text(fam);
  }
  if (a.output.empty()) {
    std::cout << payload;
    if (payload.empty() || payload.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(a.output);
    if (!out) throw ParameterError("cannot write '" + a.output + "'");
    out << payload;
  }
  json m = manifest.finish(payload);
  m["size"] = fam.size();
  std::cerr << json{{"manifest", m}}.dump() << '\n';
  return kOk;
}

// check-family -----------------------------------------------------------

int cmd_check_family(const std::string& path, int t) {
  Manifest manifest("check-family", {{"path", path}, {"t", t}});
  const ParsedFamily parsed = parse_family_auto(read_file(path));
  if (parsed.duplicates > 0) {
    std::cerr << "warning: " << parsed.duplicates << " duplicate set(s) dropped\n";
  }
  const Family& fam = parsed.family;
  if (t < 1 || t > fam.k()) throw ParameterError("check-family: need 1 <= t <= k");
  const DegreeProfile deg = degree_profile(fam);
  json report = {{"n", fam.n()},
                 {"k", fam.k()},
                 {"size", fam.size()},
                 {"intersecting", is_intersecting(fam)},
                 {"gamma", diversity(fam).gamma},
                 {"Delta", deg.max_degree},
                 {"delta", deg.min_degree},
                 {"t", t},
                 {"delta_t", min_t_degree(fam, t).min_degree},
                 {"nu", matching_number(fam)}};
  if (fam.empty()) {
    report["trivial"] = nullptr;
    report["tau"] = nullptr;
  } else {
    report["trivial"] = is_trivial(fam);
    report["tau"] = covering_number(fam);
  }
  if (parsed.duplicates > 0) report["duplicates_dropped"] = parsed.duplicates;
  const std::string payload = report.dump();
  std::cout << payload << '\n';
  std::cerr << json{{"manifest", manifest.finish(payload)}}.dump() << '\n';
  return kOk;
}

// verify -----------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> claims;
  std::string k;
  std::string n;
  std::string n_rule;
  std::string t;
  std::string s;
  std::string u;
  std::string format = "jsonl";
};

int cmd_verify(const VerifyArgs& a) {
  json params = {{"claims", a.claims}, {"k", a.k}, {"format", a.format}};
  for (auto [key, val] : {std::pair{"n", &a.n}, {"n_rule", &a.n_rule}, {"t", &a.t}, {"s", &a.s}, {"u", &a.u}}) {
    if (!val->empty()) params[key] = *val;
  }
  Manifest manifest("verify", params);

  std::vector<exact::ClaimId> claims;
  for (const std::string& c : a.claims) {
    if (c == "all" || c == "ALL") {
      for (const auto& info : exact::claim_table()) claims.push_back(info.id);
    } else {
      claims.push_back(exact::parse_claim_id(c));
    }
  }
  if (!a.n.empty() && !a.n_rule.empty()) throw ParameterError("verify: --n and --n-rule are exclusive");
  const RangeSpec ks = RangeSpec::parse(a.k);
  if (ks.depends_on_k()) throw ParameterError("verify: --k must be constant");
  std::optional<RangeSpec> ns, ts, ss, us;
  if (!a.n.empty()) ns = RangeSpec::parse(a.n);
  if (!a.n_rule.empty()) {
    const auto rule = exact::AffineRule::parse(a.n_rule);
    ns = RangeSpec{rule, rule};
  }
  if (!a.t.empty()) ts = RangeSpec::parse(a.t);
  if (!a.s.empty()) ss = RangeSpec::parse(a.s);
  if (!a.u.empty()) us = RangeSpec::parse(a.u);

  std::ostringstream payload;
  if (a.format == "csv") payload << "claim,n,k,s,t,u,holds,skipped,relation,lhs,rhs,note\n";
  long long records = 0, out_of_regime = 0, identity_failures = 0, failures = 0;
  for (exact::ClaimId id : claims) {
    const auto& info = exact::claim_info(id);
    const std::pair<char, const std::optional<RangeSpec>*> slots[] = {{'n', &ns}, {'t', &ts}, {'s', &ss}, {'u', &us}};
    for (auto [name, spec] : slots) {
      if (param_use(info.params, name).required && !*spec) {
        throw ParameterError(std::string("verify: claim ") + std::string(info.name) + " needs --" +
                             (name == 'n' ? std::string("n or --n-rule") : std::string(1, name)));
      }
    }
    auto pick = [&](char name, const std::optional<RangeSpec>& spec, int k) {
      return param_use(info.params, name).used ? optional_values(spec, k) : std::vector<std::optional<int>>{std::nullopt};
    };
    for (int k : ks.values(0)) {
      for (auto n : pick('n', ns, k)) {
        for (auto t : pick('t', ts, k)) {
          for (auto s : pick('s', ss, k)) {
            for (auto u : pick('u', us, k)) {
              exact::ParamPoint p{n, k, s, t, u};
              exact::ClaimRecord rec;
              try {
                rec = exact::evaluate_claim(id, p);
              } catch (const ParameterError&) {
                ++out_of_regime;
                continue;
              }
              ++records;
              if (!rec.outcome.holds && !rec.outcome.skipped) {
                ++failures;
                if (info.kind == exact::ClaimKind::Identity) ++identity_failures;
              }
              if (a.format == "csv") {
                payload << info.name << ',' << opt_str(p.n) << ',' << k << ',' << opt_str(p.s) << ','
                        << opt_str(p.t) << ',' << opt_str(p.u) << ',' << (rec.outcome.holds ? "true" : "false") << ','
                        << (rec.outcome.skipped ? "true" : "false") << ',' << rec.outcome.relation << ','
                        << exact::to_string(rec.outcome.lhs) << ',' << exact::to_string(rec.outcome.rhs) << ','
                        << csv_escape(rec.outcome.note) << '\n';
              } else {
                payload << claim_record_to_json(rec).dump() << '\n';
              }
            }
          }
        }
      }
    }
  }
  if (records == 0) throw ParameterError("verify: no grid point lies inside the claims' regimes");
  const std::string text = payload.str();
  std::cout << text;
  json m = manifest.finish(text);
  m["records"] = records;
  m["failures"] = failures;
  m["identity_failures"] = identity_failures;
  m["out_of_regime"] = out_of_regime;
  std::cerr << json{{"manifest", m}}.dump() << '\n';
  return identity_failures > 0 ? kClaimFailure : kOk;
}

// thresholds -------------------------------------------------------------

struct ThresholdArgs {
  std::string claim;
  std::string n_rule;
  std::optional<int> t;
  std::optional<int> s;
  std::optional<int> u;
  int lo = 3;
  int hi = 200;
};

int cmd_thresholds(const ThresholdArgs& a) {
  json params = {{"lo", a.lo}, {"hi", a.hi}};
  if (!a.claim.empty()) params["claim"] = a.claim;
  if (!a.n_rule.empty()) params["n_rule"] = a.n_rule;
  if (a.t) params["t"] = *a.t;
  if (a.s) params["s"] = *a.s;
  if (a.u) params["u"] = *a.u;
  Manifest manifest("thresholds", params);

  struct Job {
    exact::ClaimId claim;
    exact::AffineRule rule;
    exact::ParamPoint fixed;
  };
  std::vector<Job> jobs;
  if (a.claim.empty()) {
    if (!a.n_rule.empty()) throw ParameterError("thresholds: --n-rule needs --claim");
    // The scans behind the threshold remarks for the t = 1 cases.
    exact::ParamPoint t1;
    t1.t = 1;
    for (const char* rule : {"2k+5", "2k+6", "2k+8"}) {
      jobs.push_back({exact::ClaimId::EQ19_PRED, exact::AffineRule::parse(rule), t1});
    }
    jobs.push_back({exact::ClaimId::EQ09_PRED, exact::AffineRule::parse("2k+4"), t1});
  } else {
    if (a.n_rule.empty()) throw ParameterError("thresholds: --claim needs --n-rule");
    exact::ParamPoint fixed;
    fixed.t = a.t;
    fixed.s = a.s;
    fixed.u = a.u;
    jobs.push_back({exact::parse_claim_id(a.claim), exact::AffineRule::parse(a.n_rule), fixed});
  }
  json results = json::array();
  for (const Job& job : jobs) {
    results.push_back(threshold_to_json(exact::find_threshold(job.claim, job.rule, job.fixed, a.lo, a.hi)));
  }
  const std::string payload = results.dump();
  std::cout << json{{"manifest", manifest.finish(payload)}, {"result", results}}.dump(2) << '\n';
  return kOk;
}

// search -----------------------------------------------------------------

struct SearchArgs {
  std::string preset;
  std::string problem_path;
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> s;
  int t = 1;
  int threads = 1;
  std::optional<std::uint64_t> budget;
  std::string dump_dir = ".";
};

int cmd_search(const SearchArgs& a) {
  json params = {{"t", a.t}, {"threads", a.threads}};
  if (!a.preset.empty()) params["preset"] = a.preset;
  if (!a.problem_path.empty()) params["problem"] = a.problem_path;
  if (a.n) params["n"] = *a.n;
  if (a.k) params["k"] = *a.k;
  if (a.s) params["s"] = *a.s;
  if (a.budget) params["budget"] = *a.budget;
  Manifest manifest("search", params);

  SearchProblem problem;
  if (!a.problem_path.empty()) {
    if (!a.preset.empty()) throw ParameterError("search: --preset and --problem are exclusive");
    json j;
    try {
      j = json::parse(read_file(a.problem_path));
    } catch (const json::parse_error& e) {
      throw ParseError(0, std::string("problem file: ") + e.what());
    }
    problem = problem_from_json(j);
  } else {
    if (a.preset.empty()) throw ParameterError("search: give --preset or --problem");
    if (!a.k) throw ParameterError("search: --k is required");
    int n = a.n.value_or(0);
    if (a.preset == "problem1") n = a.n.value_or(2 * *a.k + 1);
    if (n == 0) throw ParameterError("search: --n is required");
    problem = preset_problem(a.preset, n, *a.k, a.s, a.t);
  }
  if (a.budget) problem.budget = *a.budget;

  SearchOptions options;
  options.threads = a.threads;
  const SearchResult result = maximize(problem, options);
  json out = result_to_json(result);
  out["problem"] = problem_to_json(problem);
  const std::string invalid = result.witness ? validate_witness(problem, result) : std::string();
  out["witness_valid"] = invalid.empty();
  if (!invalid.empty()) out["witness_error"] = invalid;

  if (result.counterexample()) {
    const ConstraintSet& c = problem.constraints;
    const std::string path = a.dump_dir + "/extset-counterexample-n" + std::to_string(c.n) + "-k" +
                             std::to_string(c.k) + "-t" + std::to_string(c.t) + ".json";
    std::ofstream dump(path);
    dump << json{{"problem", problem_to_json(problem)}, {"certificate", out}}.dump(2) << '\n';
    std::cerr << "counterexample to a theorem bound written to " << path << '\n';
  }
  const std::string payload = out.dump();
  std::cout << json{{"manifest", manifest.finish(payload)}, {"result", out}}.dump(2) << '\n';
  if (!invalid.empty()) return kInternal;
  return result.status == SearchStatus::Timeout ? kBudget : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for intersecting families and degree versions of EKR-type bounds"};
  app.set_version_flag("--version", EXTSET_VERSION);
  app.require_subcommand(1);

  ConstructArgs construct;
  auto* c_cmd = app.add_subcommand("construct", "Write a named extremal family");
  c_cmd->add_option("name", construct.name, "a0, star, hm, ak or full")->required();
  c_cmd->add_option("--n", construct.n, "Ground set size")->required();
  c_cmd->add_option("--k", construct.k, "Set size")->required();
  c_cmd->add_option("--s", construct.s, "s for a0 and ak");
  c_cmd->add_option("--u", construct.u, "u for hm (default k)");
  c_cmd->add_option("--center", construct.center, "Center of the star")->capture_default_str();
  c_cmd->add_option("--format", construct.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  c_cmd->add_option("-o,--output", construct.output, "Output path (default stdout)");

  std::string check_path;
  int check_t = 1;
  auto* f_cmd = app.add_subcommand("check-family", "Report invariants of a family file");
  f_cmd->add_option("path", check_path, "Family file (text or JSON)")->required();
  f_cmd->add_option("--t", check_t, "t for delta_t")->capture_default_str();

  VerifyArgs verify;
  auto* v_cmd = app.add_subcommand("verify", "Evaluate claims on a parameter grid");
  v_cmd->add_option("--claim", verify.claims, "Claim id or alias (repeatable, 'all' for every claim)")->required();
  v_cmd->add_option("--k", verify.k, "k range, e.g. 3..6")->required();
  v_cmd->add_option("--n", verify.n, "n range, affine in k, e.g. 2k+1..30");
  v_cmd->add_option("--n-rule", verify.n_rule, "n as an affine rule in k, e.g. 2k+5");
  v_cmd->add_option("--t", verify.t, "t range, e.g. 1..k-1");
  v_cmd->add_option("--s", verify.s, "s range");
  v_cmd->add_option("--u", verify.u, "u range, e.g. 3..k");
  v_cmd->add_option("--format", verify.format, "jsonl or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}))
      ->capture_default_str();

  ThresholdArgs thresholds;
  auto* t_cmd = app.add_subcommand("thresholds", "Smallest k from which a claim holds along n = ak+b");
  t_cmd->add_option("--claim", thresholds.claim, "Claim id (default: the standard t = 1 scans)");
  t_cmd->add_option("--n-rule", thresholds.n_rule, "n as an affine rule in k");
  t_cmd->add_option("--t", thresholds.t, "Fixed t");
  t_cmd->add_option("--s", thresholds.s, "Fixed s");
  t_cmd->add_option("--u", thresholds.u, "Fixed u");
  t_cmd->add_option("--lo", thresholds.lo, "Window start")->capture_default_str();
  t_cmd->add_option("--hi", thresholds.hi, "Window end")->capture_default_str();

  SearchArgs search;
  auto* s_cmd = app.add_subcommand("search", "Exact isomorph-free search");
  s_cmd->add_option("--preset", search.preset, "ekr-degree, hm-degree, emc-degree, problem1 or problem2");
  s_cmd->add_option("--problem", search.problem_path, "Problem description (JSON)");
  s_cmd->add_option("--n", search.n, "Ground set size");
  s_cmd->add_option("--k", search.k, "Set size");
  s_cmd->add_option("--s", search.s, "Matching bound for emc-degree");
  s_cmd->add_option("--t", search.t, "t for the minimum t-degree")->capture_default_str();
  s_cmd->add_option("--threads", search.threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  s_cmd->add_option("--budget", search.budget, "Node cap (overrides the table)");
  s_cmd->add_option("--dump-dir", search.dump_dir, "Directory for counterexample certificates")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParams;
  }

  try {
    if (*c_cmd) return cmd_construct(construct);
    if (*f_cmd) return cmd_check_family(check_path, check_t);
    if (*v_cmd) return cmd_verify(verify);
    if (*t_cmd) return cmd_thresholds(thresholds);
    if (*s_cmd) return cmd_search(search);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const ParameterError& e) {
    std::cerr << "invalid parameters: " << e.what() << '\n';
    return kParams;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kParams;
}
