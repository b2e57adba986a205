// Command-line front end.  Every subcommand prints a single JSON object to
// stdout, except `gens` without --out which prints plain element lines so the
// output can be fed straight back into --gens-file.
//
// Exit codes: 0 success or a computed value, 1 a verification verdict failed,
// 2 bad usage or invalid arguments, 3 a size guard or search budget ran out.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pathend/closure.hpp"
#include "pathend/enumeration.hpp"
#include "pathend/formulas.hpp"
#include "pathend/generators.hpp"
#include "pathend/regularity.hpp"
#include "pathend/reductions.hpp"
#include "pathend/transformation.hpp"

using json = nlohmann::ordered_json;
using namespace pathend;

namespace {

int default_cap() {
  if (const char* env = std::getenv("PATHEND_CAP")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("PATHEND_CAP is not an integer");
    }
  }
  return EnumerationOptions{}.cap;
}

struct Emitter {
  std::string command;
  json parameters = json::object();
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  int emit(const std::string& verdict, json payload, int exit_code) const {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    json out{{"command", command},
             {"parameters", parameters},
             {"verdict", verdict},
             {"payload", std::move(payload)},
             {"elapsed_ms", elapsed.count()}};
    std::cout << out.dump(2) << "\n";
    return exit_code;
  }
};

std::vector<Transformation> read_gens_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::vector<Transformation> gens;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto t = parse_transformation(line);
    if (t.n() != n)
      throw std::invalid_argument(path + ": element " + line + " is not on " +
                                  std::to_string(n) + " vertices");
    gens.push_back(std::move(t));
  }
  if (gens.empty()) throw std::invalid_argument(path + ": no generators");
  return gens;
}

json interval_json(const Interval& iv) { return json::array({iv.lo, iv.hi}); }

json word_json(const std::vector<int>& word) {
  json arr = json::array();
  for (int g : word) arr.push_back(g);
  return arr;
}

int run_count(Emitter& em, const std::string& cls_name, int n,
              const std::string& method, const EnumerationOptions& opts) {
  EndoClass cls = class_from_name(cls_name);
  const bool has_dp = cls == EndoClass::End || cls == EndoClass::WEnd;
  std::string used = method;
  if (used == "auto") used = has_dp ? "dp" : "enumerate";
  BigCount count;
  if (used == "dp") {
    if (!has_dp)
      throw std::invalid_argument("dp counting covers only end and wend");
    count = count_class_dp(cls, n);
  } else {
    count = enumerate_class(cls, n, opts).cardinality();
  }
  return em.emit("ok", {{"count", count.str()}, {"method", used}}, 0);
}

int run_formula(Emitter& em, int n, bool with_tables) {
  BigCount closed = wend_count_closed(n);
  BigCount recursive = wend_count_recursive(n);
  json payload{{"count", closed.str()},
               {"closed", closed.str()},
               {"recursive", recursive.str()}};
  if (with_tables && n >= 3) {
    ATable table = a_table(n);
    json rows = json::array();
    for (int r = 1; r <= n - 2; ++r) {
      json row = json::array();
      for (int i = 1; i <= n - 1; ++i) row.push_back(table.at(r, i).str());
      rows.push_back(std::move(row));
    }
    json bs = json::array();
    for (const auto& b : b_values(n)) bs.push_back(b.str());
    payload["a_table"] = std::move(rows);
    payload["b_values"] = std::move(bs);
  }
  if (closed != recursive)
    return em.emit("mismatch", std::move(payload), 1);
  return em.emit("ok", std::move(payload), 0);
}

int run_enumerate(Emitter& em, const std::string& cls_name, int n,
                  const std::string& out_path, const EnumerationOptions& opts) {
  MonoidSet set = enumerate_class(class_from_name(cls_name), n, opts);
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open " + out_path);
  write_dump(set, out);
  return em.emit("ok", {{"size", set.cardinality().str()}, {"out", out_path}}, 0);
}

int run_gens(Emitter& em, const std::string& family_name_arg, int n,
             const std::string& out_path) {
  GeneratorFamily fam = family(family_from_name(family_name_arg), n);
  if (out_path.empty()) {
    for (const auto& t : fam.members) std::cout << to_string(t) << "\n";
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open " + out_path);
  for (const auto& t : fam.members) out << to_string(t) << "\n";
  return em.emit(
      "ok",
      {{"family", family_name(fam.name)}, {"size", fam.members.size()}, {"out", out_path}},
      0);
}

int run_closure(Emitter& em, int n, const std::string& family_name_arg,
                const std::string& gens_path, const std::string& check_class,
                std::size_t max_elements, const EnumerationOptions& opts) {
  std::vector<Transformation> gens;
  if (!family_name_arg.empty())
    gens = family(family_from_name(family_name_arg), n).members;
  else
    gens = read_gens_file(gens_path, n);
  MonoidSet closure = generate(gens, {max_elements});
  json payload{{"generators", gens.size()}, {"size", closure.cardinality().str()}};
  if (check_class.empty()) return em.emit("ok", std::move(payload), 0);

  MonoidSet want = enumerate_class(class_from_name(check_class), n, opts);
  json missing = json::array(), extra = json::array();
  for (const auto& t : want.elements()) {
    if (missing.size() == 10) break;
    if (!closure.contains(t)) missing.push_back(to_string(t));
  }
  for (const auto& t : closure.elements()) {
    if (extra.size() == 10) break;
    if (!want.contains(t)) extra.push_back(to_string(t));
  }
  const bool equal = closure == want;
  payload["class_size"] = want.cardinality().str();
  payload["equal"] = equal;
  payload["missing_sample"] = std::move(missing);
  payload["extra_sample"] = std::move(extra);
  return em.emit(equal ? "pass" : "fail", std::move(payload), equal ? 0 : 1);
}

int run_rank(Emitter& em, const std::string& cls_name, int n, const std::string& mode,
             std::uint64_t budget, const EnumerationOptions& opts) {
  EndoClass cls = class_from_name(cls_name);
  if (mode == "formula")
    return em.emit("ok", {{"rank", rank_formula(cls, n)}}, 0);
  if (mode == "certificate") {
    RankCertificate cert = rank_certificate(cls, n, opts);
    json payload{{"rank", cert.formula_value},
                 {"family_size", cert.family_size},
                 {"closure_ok", cert.closure_ok},
                 {"lower_bound_ok", cert.lower_bound_ok},
                 {"irredundant_ok", cert.irredundant_ok},
                 {"census",
                  {{"has_reversal", cert.census.has_reversal},
                   {"inv1_end", cert.census.inv1_end},
                   {"inv2_end", cert.census.inv2_end},
                   {"inv0_non_end", cert.census.inv0_non_end}}}};
    return em.emit(cert.valid() ? "pass" : "fail", std::move(payload), cert.valid() ? 0 : 1);
  }
  // brute: independent of the formula, so report agreement rather than assume it
  std::optional<int> found = brute_force_rank(cls, n, budget, opts);
  if (!found)
    return em.emit("budget-exhausted", {{"budget", budget}}, 3);
  json payload{{"rank", *found}};
  try {
    payload["matches_formula"] = (*found == rank_formula(cls, n));
  } catch (const std::invalid_argument&) {
    // no closed form for this class
  }
  return em.emit("ok", std::move(payload), 0);
}

int run_relative_rank(Emitter& em, int n, std::uint64_t budget,
                      const EnumerationOptions& opts) {
  RelativeRankResult r = relative_rank_check(n, budget, opts);
  json payload{{"needed", r.needed}, {"upper_ok", r.upper_ok}};
  payload["lower_ok"] = r.lower_ok.has_value() ? json(*r.lower_ok) : json(nullptr);
  if (!r.upper_ok || (r.lower_ok.has_value() && !*r.lower_ok))
    return em.emit("fail", std::move(payload), 1);
  if (!r.lower_ok.has_value()) return em.emit("budget-exhausted", std::move(payload), 3);
  return em.emit("pass", std::move(payload), 0);
}

int run_regular(Emitter& em, const std::string& cls_name, const std::string& element,
                int n, bool whole_class, const EnumerationOptions& opts) {
  EndoClass cls = class_from_name(cls_name);
  if (whole_class) {
    ClassRegularity r = class_regular(cls, n, opts);
    json payload{{"regular", r.regular}};
    if (r.counterexample) payload["counterexample"] = to_string(*r.counterexample);
    return em.emit(r.regular ? "regular" : "not-regular", std::move(payload), 0);
  }
  Transformation t = parse_transformation(element);
  RegularityReport report = regular_by_criterion(t, cls);
  json payload{{"element", to_string(t)}, {"regular", report.regular}};
  if (report.regular) {
    payload["interval"] = interval_json(*report.interval);
    Transformation b = pseudo_inverse(t);
    payload["witness"] = to_string(b);
    payload["verified"] = (compose(compose(t, b), t) == t);
  }
  return em.emit(report.regular ? "regular" : "not-regular", std::move(payload), 0);
}

int run_verify(Emitter& em, int n, const std::string& which,
               const EnumerationOptions& opts) {
  json checks = json::array();
  bool all_ok = true;
  auto take = [&](const StructureReport& report) {
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
      all_ok = all_ok && c.ok;
    }
  };
  if (which == "structure" || which == "all") take(verify_structure(n, opts));
  if (which == "reductions" || which == "all") take(verify_reductions(n, opts));
  return em.emit(all_ok ? "pass" : "fail", {{"checks", std::move(checks)}, {"all_ok", all_ok}},
                 all_ok ? 0 : 1);
}

int run_word(Emitter& em, int n, const std::string& family_name_arg,
             const std::string& gens_path, const std::string& element) {
  std::vector<Transformation> gens;
  if (!family_name_arg.empty())
    gens = family(family_from_name(family_name_arg), n).members;
  else
    gens = read_gens_file(gens_path, n);
  Transformation target = parse_transformation(element);
  std::optional<std::vector<int>> word = word_for(gens, target);
  if (!word)
    return em.emit("unreachable", {{"element", to_string(target)}}, 1);
  json gens_used = json::array();
  for (int g : *word) gens_used.push_back(to_string(gens[static_cast<std::size_t>(g)]));
  return em.emit("ok",
                 {{"element", to_string(target)},
                  {"word", word_json(*word)},
                  {"length", word->size()},
                  {"factors", std::move(gens_used)}},
                 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Endomorphism monoids of the undirected path"};
  app.require_subcommand(1);

  std::string cls = "wend", method = "auto", mode = "formula", which = "all";
  std::string family_arg, gens_file, out_path, element, check_class;
  int n = 0;
  int cap = 0;
  int threads = 1;
  bool with_tables = false, whole_class = false;
  std::uint64_t budget = 0;
  std::size_t max_elements = ClosureOptions{}.max_elements;

  auto add_common = [&](CLI::App* sub, bool needs_n = true) {
    if (needs_n) sub->add_option("--n", n, "number of vertices")->required();
    sub->add_option("--cap", cap, "enumeration cap on n (env PATHEND_CAP)");
    sub->add_option("--threads", threads, "enumeration worker threads");
  };

  CLI::App* c_count = app.add_subcommand("count", "cardinality of a class");
  c_count->add_option("--class", cls, "end|wend|send|swend|aut");
  c_count->add_option("--method", method, "auto|dp|enumerate");
  add_common(c_count);

  CLI::App* c_formula = app.add_subcommand("formula", "weak endomorphism count by formula");
  c_formula->add_option("--n", n, "number of vertices")->required();
  c_formula->add_flag("--tables", with_tables, "include the auxiliary tables");

  CLI::App* c_enum = app.add_subcommand("enumerate", "write all elements of a class");
  c_enum->add_option("--class", cls, "end|wend|send|swend|aut");
  c_enum->add_option("--out", out_path, "output file, one element per line")->required();
  add_common(c_enum);

  CLI::App* c_gens = app.add_subcommand("gens", "members of a generating family");
  c_gens->add_option("--family", family_arg, "aprime|adoubleprime|a|b|swgens")->required();
  c_gens->add_option("--n", n, "number of vertices")->required();
  c_gens->add_option("--out", out_path, "write here instead of plain stdout");

  CLI::App* c_closure = app.add_subcommand("closure", "closure of a generating set");
  c_closure->add_option("--family", family_arg, "named family to close");
  c_closure->add_option("--gens-file", gens_file, "file of elements, one per line");
  c_closure->add_option("--check-equal", check_class, "compare against this class");
  c_closure->add_option("--max-elements", max_elements, "closure size guard");
  add_common(c_closure);

  CLI::App* c_rank = app.add_subcommand("rank", "minimum generating set size");
  c_rank->add_option("--class", cls, "end|wend|swend");
  c_rank->add_option("--mode", mode, "formula|certificate|brute");
  c_rank->add_option("--budget", budget, "closure attempts for brute mode");
  add_common(c_rank);

  CLI::App* c_rel = app.add_subcommand("relative-rank", "extra elements from end to wend");
  c_rel->add_option("--budget", budget, "subset closures for the lower bound");
  add_common(c_rel);

  CLI::App* c_reg = app.add_subcommand("regular", "regularity of an element or a class");
  c_reg->add_option("--class", cls, "end|wend");
  c_reg->add_option("--element", element, "element as comma-separated images");
  c_reg->add_flag("--all", whole_class, "scan the whole class (needs --n)");
  c_reg->add_option("--n", n, "number of vertices");
  c_reg->add_option("--cap", cap, "enumeration cap on n (env PATHEND_CAP)");
  c_reg->add_option("--threads", threads, "enumeration worker threads");

  CLI::App* c_verify = app.add_subcommand("verify", "structure and reduction checks");
  c_verify->add_option("--which", which, "structure|reductions|all");
  add_common(c_verify);

  CLI::App* c_word = app.add_subcommand("word", "shortest factorisation over a family");
  c_word->add_option("--family", family_arg, "named generating family");
  c_word->add_option("--gens-file", gens_file, "file of elements, one per line");
  c_word->add_option("--element", element, "target element")->required();
  c_word->add_option("--n", n, "number of vertices")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  Emitter em;
  em.command = sub->get_name();
  for (const auto* opt : sub->get_options())
    if (opt->count() > 0 && !opt->get_lnames().empty())
      em.parameters[opt->get_lnames().front()] = opt->results().front();

  try {
    EnumerationOptions opts;
    if (cap > 0)
      opts.cap = cap;
    else
      opts.cap = default_cap();
    opts.threads = threads;
    if (budget == 0)
      budget = sub == c_rel ? kDefaultRelativeRankBudget : kDefaultRankBudget;

    if (sub == c_count) return run_count(em, cls, n, method, opts);
    if (sub == c_formula) return run_formula(em, n, with_tables);
    if (sub == c_enum) return run_enumerate(em, cls, n, out_path, opts);
    if (sub == c_gens) return run_gens(em, family_arg, n, out_path);
    if (sub == c_closure) {
      if (family_arg.empty() == gens_file.empty())
        throw std::invalid_argument("closure needs exactly one of --family, --gens-file");
      return run_closure(em, n, family_arg, gens_file, check_class, max_elements, opts);
    }
    if (sub == c_rank) return run_rank(em, cls, n, mode, budget, opts);
    if (sub == c_rel) return run_relative_rank(em, n, budget, opts);
    if (sub == c_reg) {
      if (!whole_class && element.empty())
        throw std::invalid_argument("regular needs --element or --all");
      if (whole_class && n == 0)
        throw std::invalid_argument("regular --all needs --n");
      return run_regular(em, cls, element, n, whole_class, opts);
    }
    if (sub == c_verify) {
      if (which != "structure" && which != "reductions" && which != "all")
        throw std::invalid_argument("verify --which must be structure, reductions or all");
      return run_verify(em, n, which, opts);
    }
    if (sub == c_word) return run_word(em, n, family_arg, gens_file, element);
    return 2;
  } catch (const SizeGuardError& e) {
    return em.emit("size-guard", {{"error", e.what()}}, 3);
  } catch (const std::invalid_argument& e) {
    return em.emit("invalid-argument", {{"error", e.what()}}, 2);
  } catch (const std::exception& e) {
    return em.emit("error", {{"error", e.what()}}, 1);
  }
}
