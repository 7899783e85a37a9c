#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "easp/asp.hpp"
#include "easp/correspondence.hpp"
#include "easp/kmin.hpp"
#include "easp/reducts.hpp"

namespace easp::cli {

namespace {

using json = nlohmann::ordered_json;

struct ConfigFlags {
  std::string preset;
  std::string reduct;
  std::string t;
  std::string scope;
  std::string kmin;
  std::string refutation;

  void add_to(CLI::App* app) {
    app->add_option("--preset", preset, "es94, kahl, eem-f, faeel, raeel or easp-<f|r>[-global][-<kd|sw5>]");
    app->add_option("--reduct", reduct, "es94, kahl or easp");
    app->add_option("--t", t, "functional or relational");
    app->add_option("--scope", scope, "per-point or global");
    app->add_option("--kmin", kmin, "none, kd or sw5");
    app->add_option("--refutation", refutation, "existential or universal (relational, per-point)");
  }

  SemanticsConfig build() const {
    SemanticsConfig c = preset.empty() ? SemanticsConfig{} : easp::preset(preset);
    if (!reduct.empty()) c.reduct = parse_reduct(reduct);
    if (!t.empty()) c.t_variant = parse_t_variant(t);
    if (!scope.empty()) c.t_scope = parse_t_scope(scope);
    if (!kmin.empty()) c.kmin = parse_kmin(kmin);
    if (!refutation.empty()) c.refutation = parse_refutation(refutation);
    return c;
  }
};

struct SolveFlags {
  std::size_t max_signature = kDefaultSignatureCap;
  unsigned jobs = 1;
  bool no_timing = false;
  bool json = false;

  void add_to(CLI::App* app) {
    app->add_option("--max-signature", max_signature, "largest signature to enumerate")
        ->capture_default_str();
    app->add_option("--jobs", jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    app->add_flag("--no-timing", no_timing, "report ms as 0");
    app->add_flag("--json", json, "JSON output");
  }
};

json config_json(const SemanticsConfig& c) {
  json j;
  j["reduct"] = to_string(c.reduct);
  if (c.reduct == ReductKind::kEasp) {
    j["t"] = to_string(c.t_variant);
    j["scope"] = to_string(c.t_scope);
    j["kmin"] = to_string(c.kmin);
    if (c.t_variant == TVariant::kRelational && c.t_scope == TScope::kPerPoint)
      j["refutation"] = to_string(c.refutation);
  }
  return j;
}

json collections_json(const std::vector<Collection>& cs, const Signature& sig) {
  json out = json::array();
  for (const Collection& c : cs) out.push_back(to_atom_lists(c, sig));
  return out;
}

std::string render(const Collection& c, const Signature& sig) {
  return to_string(c.canonical(), sig);
}

long elapsed_ms(std::chrono::steady_clock::time_point start, bool no_timing) {
  if (no_timing) return 0;
  return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count());
}

std::string signature_line(const Signature& sig) {
  std::string s;
  for (const std::string& a : sig.atoms()) s += (s.empty() ? "" : " ") + a;
  return s;
}

// {{{ solve

int cmd_solve(const std::string& file, const ConfigFlags& cf, const SolveFlags& sf,
              std::ostream& out) {
  const Program p = parse_program_file(file);
  const SemanticsConfig cfg = cf.build();
  const auto start = std::chrono::steady_clock::now();
  ProgramWorldViews r = world_views(p, cfg, sf.max_signature, sf.jobs);
  const long ms = elapsed_ms(start, sf.no_timing);
  const auto& wvs = r.result.world_views;
  if (sf.json) {
    json j;
    j["config"] = config_json(cfg);
    j["program"] = to_string(p);
    j["signature"] = r.signature.atoms();
    j["world_views"] = collections_json(wvs, r.signature);
    j["candidates_checked"] = r.result.candidates_checked;
    j["ms"] = ms;
    out << j.dump(2) << "\n";
  } else {
    out << "config: " << to_string(cfg) << "\n";
    out << "signature: " << signature_line(r.signature) << "\n";
    out << "world-views: " << wvs.size() << "\n";
    for (const Collection& c : wvs) out << "  " << render(c, r.signature) << "\n";
    out << "candidates checked: " << r.result.candidates_checked << "\n";
  }
  return wvs.empty() ? kNone : kFound;
}

// }}}

// {{{ diff

int cmd_diff(const std::string& file, const std::string& a, const std::string& b,
             const SolveFlags& sf, std::ostream& out) {
  const Program p = parse_program_file(file);
  const SemanticsConfig ca = preset(a), cb = preset(b);
  ProgramWorldViews ra = world_views(p, ca, sf.max_signature, sf.jobs);
  ProgramWorldViews rb = world_views(p, cb, sf.max_signature, sf.jobs);
  const auto& wa = ra.result.world_views;
  const auto& wb = rb.result.world_views;
  std::vector<Collection> only_a, only_b, shared;
  for (const Collection& c : wa)
    (std::find(wb.begin(), wb.end(), c) == wb.end() ? only_a : shared).push_back(c);
  for (const Collection& c : wb)
    if (std::find(wa.begin(), wa.end(), c) == wa.end()) only_b.push_back(c);
  const Signature& sig = ra.signature;
  if (sf.json) {
    json j;
    j["a"] = {{"preset", a}, {"config", config_json(ca)}};
    j["b"] = {{"preset", b}, {"config", config_json(cb)}};
    j["program"] = to_string(p);
    j["signature"] = sig.atoms();
    j["only_in_a"] = collections_json(only_a, sig);
    j["only_in_b"] = collections_json(only_b, sig);
    j["shared"] = collections_json(shared, sig);
    out << j.dump(2) << "\n";
  } else {
    auto section = [&](const std::string& title, const std::vector<Collection>& cs) {
      out << title << ": " << cs.size() << "\n";
      for (const Collection& c : cs) out << "  " << render(c, sig) << "\n";
    };
    out << "a: " << a << " (" << to_string(ca) << ")\n";
    out << "b: " << b << " (" << to_string(cb) << ")\n";
    section("only in a", only_a);
    section("only in b", only_b);
    section("shared", shared);
  }
  return kFound;
}

// }}}

// {{{ answersets, reduct

int cmd_answersets(const std::string& file, bool as_json, std::ostream& out) {
  const Program p = parse_program_file(file);
  AnswerSetResult r = answer_sets(p);
  if (as_json) {
    json sets = json::array();
    for (Valuation v : r.answer_sets) {
      std::vector<std::string> atoms;
      for (std::size_t i = 0; i < r.signature.size(); ++i)
        if (v.contains(i)) atoms.push_back(r.signature.name(i));
      sets.push_back(atoms);
    }
    json j;
    j["program"] = to_string(p);
    j["signature"] = r.signature.atoms();
    j["answer_sets"] = sets;
    out << j.dump(2) << "\n";
  } else {
    out << "answer sets: " << r.answer_sets.size() << "\n";
    for (Valuation v : r.answer_sets) out << "  " << to_string(v, r.signature) << "\n";
  }
  return r.answer_sets.empty() ? kNone : kFound;
}

int cmd_reduct(const std::string& file, const std::string& kind, const std::string& collection,
               std::size_t point, std::ostream& out) {
  const Program p = eliminate_strong_negation(parse_program_file(file));
  const Signature sig = p.signature();
  json parsed = json::parse(collection, nullptr, false);
  if (parsed.is_discarded() || !parsed.is_array())
    throw std::invalid_argument("--collection expects a JSON array of atom lists, e.g. [[\"a\"],[]]");
  std::vector<Valuation> pts;
  for (const json& v : parsed) pts.push_back(parse_valuation(v.get<std::vector<std::string>>(), sig));
  const Collection c(std::move(pts));
  const EncodedProgram ep = encode(p, sig);
  EncodedProgram r;
  if (kind == "easp") {
    r = easp_reduct(ep, PointedCollection(c, point));
  } else if (kind == "es94") {
    r = es94_reduct(ep, c);
  } else if (kind == "kahl") {
    r = kahl_reduct(ep, c);
  } else {
    throw std::invalid_argument("unknown reduct '" + kind + "'");
  }
  out << to_string(decode(r, sig));
  return kFound;
}

// }}}

// {{{ corpus commands

struct CorpusFlags {
  CorpusParams params;
  unsigned jobs = 1;

  void add_to(CLI::App* app, std::size_t atoms, std::size_t samples) {
    params.atoms = atoms;
    params.samples = samples;
    app->add_option("--atoms", params.atoms, "atom pool size")->capture_default_str()->check(CLI::Range(1, 5));
    app->add_option("--samples", params.samples, "random programs")->capture_default_str();
    app->add_option("--seed", params.seed, "generator seed")->capture_default_str();
    app->add_option("--jobs", jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  }
};

json params_json(const CorpusParams& p) {
  return {{"atoms", p.atoms},
          {"samples", p.samples},
          {"seed", p.seed},
          {"max_rules", p.max_rules},
          {"max_head", p.max_head},
          {"max_body", p.max_body},
          {"naf_probability", p.naf_probability}};
}

int cmd_check_lemma(int lemma, std::size_t max_collection, const CorpusFlags& cf, bool no_timing,
                    std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  LemmaReport r = run_lemma(lemma, cf.params, max_collection, cf.jobs);
  json cx = json::array();
  for (const LemmaCounterexample& c : r.counterexamples) {
    cx.push_back({{"program_index", c.program_index},
                  {"program", c.program},
                  {"collection", c.collection},
                  {"weakening", c.weakening},
                  {"pair", c.pair},
                  {"lhs", c.values.lhs},
                  {"rhs", c.values.rhs},
                  {"premise", c.values.premise},
                  {"lhs_collapsed", c.values.lhs_collapsed}});
  }
  json j;
  j["lemma"] = lemma;
  j["params"] = params_json(r.params);
  j["max_collection"] = max_collection;
  j["programs"] = r.programs;
  j["collections"] = r.collections;
  j["weakenings"] = r.weakenings;
  j["instances"] = r.instances;
  j["premise_instances"] = r.premise_instances;
  j["counterexamples"] = cx;
  j["ms"] = elapsed_ms(start, no_timing);
  out << j.dump(2) << "\n";
  return r.counterexamples.empty() ? kFound : kCounterexample;
}

json correspondence_json(const CorrespondenceReport& r) {
  return {{"variant", to_string(r.variant)},
          {"signature", r.signature.atoms()},
          {"t_minimal", collections_json(r.t_minimal, r.signature)},
          {"equilibrium", collections_json(r.equilibrium, r.signature)},
          {"equal", r.equal()}};
}

int cmd_correspond(const std::string& file, const std::string& variant, const CorpusFlags& cf,
                   bool no_timing, std::ostream& out) {
  const TVariant v = parse_t_variant(variant);
  const auto start = std::chrono::steady_clock::now();
  json j;
  bool ok;
  if (!file.empty()) {
    const Program p = parse_program_file(file);
    CorrespondenceReport r = check_correspondence(p, v);
    j = correspondence_json(r);
    j["program"] = to_string(p);
    ok = r.equal();
  } else {
    CorrespondenceCorpusReport r = run_correspondence(v, cf.params, cf.jobs);
    json mm = json::array();
    for (const CorrespondenceMismatch& m : r.mismatches) {
      json e = correspondence_json(m.report);
      e["program_index"] = m.program_index;
      e["program"] = m.program;
      mm.push_back(e);
    }
    j["variant"] = to_string(v);
    j["params"] = params_json(r.params);
    j["programs"] = r.programs;
    j["mismatches"] = mm;
    ok = r.mismatches.empty();
  }
  j["ms"] = elapsed_ms(start, no_timing);
  out << j.dump(2) << "\n";
  return ok ? kFound : kCounterexample;
}

int cmd_search_divergence(const CorpusFlags& cf, bool no_timing, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  DivergenceReport r = search_divergence(cf.params, cf.jobs);
  json ds = json::array();
  for (const Divergence& d : r.divergences) {
    ds.push_back({{"program_index", d.program_index},
                  {"program", d.program},
                  {"variant", to_string(d.variant)},
                  {"signature", d.signature.atoms()},
                  {"per_point_only", collections_json(d.perpoint_only, d.signature)},
                  {"global_only", collections_json(d.global_only, d.signature)}});
  }
  json j;
  j["params"] = params_json(r.params);
  j["programs"] = r.programs;
  j["divergences"] = ds;
  j["ms"] = elapsed_ms(start, no_timing);
  out << j.dump(2) << "\n";
  return kFound;
}

// }}}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reference solver for epistemic logic programs"};
  app.name("easp");
  app.require_subcommand(1);

  std::string file;
  ConfigFlags config;
  SolveFlags solve_flags;
  auto* solve = app.add_subcommand("solve", "Compute world-views");
  solve->add_option("file", file, "program file")->required();
  config.add_to(solve);
  solve_flags.add_to(solve);

  std::string diff_a, diff_b;
  SolveFlags diff_flags;
  auto* diff = app.add_subcommand("diff", "Compare the world-views of two presets");
  diff->add_option("file", file, "program file")->required();
  diff->add_option("--a", diff_a, "first preset")->required();
  diff->add_option("--b", diff_b, "second preset")->required();
  diff_flags.add_to(diff);

  bool as_json = false;
  auto* answersets = app.add_subcommand("answersets", "Answer sets of a modality-free program");
  answersets->add_option("file", file, "program file")->required();
  answersets->add_flag("--json", as_json, "JSON output");

  std::string reduct_kind = "easp", reduct_collection;
  std::size_t reduct_point = 0;
  auto* reduct = app.add_subcommand("reduct", "Print the reduct of a program");
  reduct->add_option("file", file, "program file")->required();
  reduct->add_option("--semantics,--kind", reduct_kind, "easp, es94 or kahl")->capture_default_str();
  reduct->add_option("--collection", reduct_collection, "JSON array of atom lists")->required();
  reduct->add_option("--point", reduct_point, "point index (easp)")->capture_default_str();

  int lemma = 1;
  std::size_t max_collection = 3;
  bool no_timing = false;
  CorpusFlags lemma_corpus;
  auto* check_lemma = app.add_subcommand("check-lemma", "Check a lemma over a random corpus");
  check_lemma->add_option("--lemma", lemma, "1 (functional) or 2 (relational)")
      ->capture_default_str()
      ->check(CLI::IsMember({1, 2}));
  check_lemma->add_option("--max-collection", max_collection, "largest collection")
      ->capture_default_str()
      ->check(CLI::Range(1, 4));
  check_lemma->add_flag("--no-timing", no_timing, "report ms as 0");
  lemma_corpus.add_to(check_lemma, 3, 200);

  std::string variant = "functional";
  CorpusFlags corr_corpus;
  auto* correspond = app.add_subcommand(
      "correspond", "Global t-minimal models versus equilibrium models of the translation");
  correspond->add_option("file", file, "program file (omit for the random corpus)");
  correspond->add_option("--variant", variant, "functional or relational")->capture_default_str();
  correspond->add_flag("--no-timing", no_timing, "report ms as 0");
  corr_corpus.add_to(correspond, 3, 200);

  CorpusFlags div_corpus;
  auto* divergence = app.add_subcommand(
      "search-divergence", "Programs where per-point and global t-minimality disagree");
  divergence->add_flag("--no-timing", no_timing, "report ms as 0");
  div_corpus.add_to(divergence, 2, 500);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*solve) return cmd_solve(file, config, solve_flags, out);
    if (*diff) return cmd_diff(file, diff_a, diff_b, diff_flags, out);
    if (*answersets) return cmd_answersets(file, as_json, out);
    if (*reduct) return cmd_reduct(file, reduct_kind, reduct_collection, reduct_point, out);
    if (*check_lemma) return cmd_check_lemma(lemma, max_collection, lemma_corpus, no_timing, out);
    if (*correspond) return cmd_correspond(file, variant, corr_corpus, no_timing, out);
    if (*divergence) return cmd_search_divergence(div_corpus, no_timing, out);
  } catch (const CapExceeded& e) {
    err << "easp: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const std::exception& e) {
    err << "easp: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace easp::cli
