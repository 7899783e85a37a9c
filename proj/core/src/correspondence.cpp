#include "easp/correspondence.hpp"

#include <algorithm>
#include <stdexcept>

#include "easp/parallel.hpp"
#include "easp/reducts.hpp"

namespace easp {

// {{{ Random programs

namespace {

Literal random_literal(std::mt19937_64& rng, std::size_t atoms) {
  std::uniform_int_distribution<std::size_t> pick_atom(0, atoms - 1);
  std::uniform_int_distribution<int> pick_kind(0, 3);
  ObjLiteral o{std::string(1, static_cast<char>('a' + pick_atom(rng))), false};
  switch (pick_kind(rng)) {
    case 2: return SubjLiteral{Modality::kKnow, o};
    case 3: return SubjLiteral{Modality::kPossible, o};
    default: return o;
  }
}

}  // namespace

Program random_program(std::mt19937_64& rng, const CorpusParams& params) {
  if (params.atoms == 0 || params.atoms > 26) throw std::invalid_argument("atoms must be in 1..26");
  std::uniform_int_distribution<int> n_rules(1, params.max_rules);
  std::uniform_int_distribution<int> n_head(0, params.max_head);
  std::uniform_int_distribution<int> n_body(0, params.max_body);
  std::bernoulli_distribution naf(params.naf_probability);
  Program p;
  const int rules = n_rules(rng);
  for (int i = 0; i < rules; ++i) {
    Rule r;
    const int h = n_head(rng);
    for (int k = 0; k < h; ++k) r.head.push_back(random_literal(rng, params.atoms));
    const int b = n_body(rng);
    for (int k = 0; k < b; ++k) {
      Literal l = random_literal(rng, params.atoms);
      r.body.push_back(ExtLiteral{std::move(l), naf(rng) ? 1 : 0, {}});
    }
    p.rules.push_back(std::move(r));
  }
  return p;
}

std::vector<Program> random_corpus(const CorpusParams& params) {
  std::mt19937_64 rng(params.seed);
  std::vector<Program> out;
  out.reserve(params.samples);
  for (std::size_t i = 0; i < params.samples; ++i) out.push_back(random_program(rng, params));
  return out;
}

std::vector<Collection> small_collections(std::size_t atoms, std::size_t max_size) {
  std::vector<Collection> out;
  CandidateEnumerator e(atoms, kMaxCandidateAtoms);
  Collection c{Valuation{}};
  while (e.next(&c) && c.size() <= max_size) out.push_back(c);
  return out;
}

// }}}

// {{{ Lemma instances

namespace {

struct Prepared {
  Signature sig;
  EncodedProgram program;
  eht::CompiledFormula formula;
};

Prepared prepare(const Program& p_in) {
  Program p = eliminate_strong_negation(p_in);
  require_no_may(p);
  Signature sig = p.signature();
  EncodedProgram ep = encode(p, sig);
  eht::CompiledFormula f(eht::translate_to_eht(p), sig);
  return {std::move(sig), std::move(ep), std::move(f)};
}

// The modal views of the weakened family, as an indexed family and as a set.
struct WeakView {
  ModalView family;
  ModalView set;

  explicit WeakView(const std::vector<Valuation>& heres) : family(ModalView::of(heres)) {
    std::vector<Valuation> v = heres;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    set = ModalView::of(v);
  }
};

// Both sides at one weakened point; `ev` evaluates the weakening model.
LemmaInstance instance_values(const EncodedProgram& reduct, bool premise, const WeakView& view,
                              Valuation h, Valuation t, eht::Evaluator& ev) {
  LemmaInstance out;
  out.premise = premise;
  out.lhs = holds(reduct, h, view.family);
  out.lhs_collapsed = holds(reduct, h, view.set);
  out.rhs = ev.here(h, t);
  return out;
}

std::string pair_string(const eht::HTPair& p, const Signature& sig) {
  return "(" + to_string(p.here, sig) + "," + to_string(p.there, sig) + ")";
}

std::string family_string(const std::vector<std::vector<Valuation>>& images,
                          const Signature& sig) {
  std::string out = "[";
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) out += ",";
    out += "{";
    for (std::size_t k = 0; k < images[i].size(); ++k) {
      if (k) out += ",";
      out += to_string(images[i][k], sig);
    }
    out += "}";
  }
  return out + "]";
}

}  // namespace

LemmaInstance check_lemma1_instance(const Program& p, const Collection& c, const WeakeningF& w,
                                    std::size_t j) {
  if (j >= c.size()) throw std::out_of_range("point index out of range");
  Prepared pp = prepare(p);
  eht::EHTModelF m(c, w);
  const ModalView view = ModalView::of(c);
  const EncodedProgram reduct = easp_reduct(pp.program, c[j], view);
  eht::Evaluator ev(pp.formula, m.pairs());
  return instance_values(reduct, holds(pp.program, c[j], view), WeakView(w.image), w.image[j], c[j],
                         ev);
}

LemmaInstance check_lemma2_instance(const Program& p, const Collection& c, const WeakeningR& r,
                                    const eht::HTPair& pair) {
  Prepared pp = prepare(p);
  eht::EHTModelR m = eht::EHTModelR::from(c, r);
  if (!m.contains(pair)) throw std::invalid_argument("pair is not in the model");
  const ModalView view = ModalView::of(c);
  const EncodedProgram reduct = easp_reduct(pp.program, pair.there, view);
  std::vector<Valuation> heres;
  for (const auto& img : r.images) heres.insert(heres.end(), img.begin(), img.end());
  eht::Evaluator ev(pp.formula, m.pairs);
  return instance_values(reduct, holds(pp.program, pair.there, view), WeakView(heres),
                         pair.here, pair.there, ev);
}

namespace {

std::vector<std::uint32_t> submasks(std::uint32_t mask) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = mask;; s = (s - 1) & mask) {
    out.push_back(s);
    if (s == 0) break;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

struct ProgramLemmaResult {
  std::uint64_t collections = 0;
  std::uint64_t weakenings = 0;
  std::uint64_t instances = 0;
  std::uint64_t premise_instances = 0;
  std::optional<LemmaCounterexample> failure;
};

class LemmaRunner {
 public:
  LemmaRunner(const Program& p, std::size_t max_collection)
      : pp_(prepare(p)), collections_(small_collections(pp_.sig.size(), max_collection)) {}

  ProgramLemmaResult run(int lemma) {
    for (const Collection& c : collections_) {
      ++out_.collections;
      const ModalView view = ModalView::of(c);
      reducts_.clear();
      premises_.clear();
      subs_.clear();
      for (Valuation t : c.points()) {
        reducts_.push_back(easp_reduct(pp_.program, t, view));
        premises_.push_back(holds(pp_.program, t, view));
        subs_.push_back(submasks(t.bits));
      }
      if (lemma == 1 ? !functional(c) : !relational(c)) break;
    }
    return std::move(out_);
  }

 private:
  // Returns false once a counterexample has been recorded.
  template <typename Describe>
  bool record(const LemmaInstance& v, const Collection& c, Describe weakening,
              const eht::HTPair& pair) {
    ++out_.instances;
    if (v.premise) ++out_.premise_instances;
    if (v.holds()) return true;
    LemmaCounterexample cx;
    cx.program = to_string(decode(pp_.program, pp_.sig));
    cx.collection = to_string(c, pp_.sig);
    cx.weakening = weakening();
    cx.pair = pair_string(pair, pp_.sig);
    cx.values = v;
    out_.failure = std::move(cx);
    return false;
  }

  bool functional(const Collection& c) {
    const std::size_t n = c.size();
    std::vector<std::size_t> idx(n, 0);
    std::vector<Valuation> heres(n);
    std::vector<eht::HTPair> pairs(n);
    for (;;) {
      ++out_.weakenings;
      for (std::size_t i = 0; i < n; ++i) {
        heres[i] = Valuation{subs_[i][idx[i]]};
        pairs[i] = {heres[i], c[i]};
      }
      eht::Evaluator ev(pp_.formula, pairs);
      const WeakView view(heres);
      for (std::size_t j = 0; j < n; ++j) {
        LemmaInstance v = instance_values(reducts_[j], premises_[j], view, heres[j], c[j], ev);
        auto describe = [&] { return to_string(Collection(heres), pp_.sig); };
        if (!record(v, c, describe, pairs[j])) return false;
      }
      if (!advance(idx, [&](std::size_t i) { return subs_[i].size(); })) return true;
    }
  }

  bool relational(const Collection& c) {
    const std::size_t n = c.size();
    // Family f at point i: bit b selects subs_[i][b]; f ranges over 1..2^k-1.
    std::vector<std::size_t> fam(n, 0);
    std::vector<std::vector<Valuation>> images(n);
    std::vector<Valuation> heres;
    std::vector<eht::HTPair> pairs;
    std::vector<std::size_t> owner;
    for (;;) {
      ++out_.weakenings;
      heres.clear();
      pairs.clear();
      owner.clear();
      for (std::size_t i = 0; i < n; ++i) {
        images[i].clear();
        const std::size_t f = fam[i] + 1;
        for (std::size_t b = 0; b < subs_[i].size(); ++b) {
          if (!((f >> b) & 1u)) continue;
          const Valuation h{subs_[i][b]};
          images[i].push_back(h);
          heres.push_back(h);
          pairs.push_back({h, c[i]});
          owner.push_back(i);
        }
      }
      eht::Evaluator ev(pp_.formula, pairs);
      const WeakView view(heres);
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        const std::size_t i = owner[k];
        LemmaInstance v = instance_values(reducts_[i], premises_[i], view, pairs[k].here, c[i], ev);
        auto describe = [&] { return family_string(images, pp_.sig); };
        if (!record(v, c, describe, pairs[k])) return false;
      }
      if (!advance(fam, [&](std::size_t i) { return (std::size_t{1} << subs_[i].size()) - 1; }))
        return true;
    }
  }

  template <typename Radix>
  static bool advance(std::vector<std::size_t>& idx, Radix radix) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (++idx[i] < radix(i)) return true;
      idx[i] = 0;
    }
    return false;
  }

  Prepared pp_;
  std::vector<Collection> collections_;
  std::vector<EncodedProgram> reducts_;
  std::vector<bool> premises_;
  std::vector<std::vector<std::uint32_t>> subs_;
  ProgramLemmaResult out_;
};

}  // namespace

LemmaReport run_lemma(int lemma, const CorpusParams& params, std::size_t max_collection,
                      unsigned jobs) {
  if (lemma != 1 && lemma != 2) throw std::invalid_argument("lemma must be 1 or 2");
  const std::vector<Program> corpus = random_corpus(params);
  std::vector<ProgramLemmaResult> results(corpus.size());
  parallel_for(corpus.size(), jobs, [&](std::size_t i) {
    results[i] = LemmaRunner(corpus[i], max_collection).run(lemma);
  });
  LemmaReport report;
  report.lemma = lemma;
  report.params = params;
  report.programs = corpus.size();
  for (std::size_t i = 0; i < results.size(); ++i) {
    report.collections += results[i].collections;
    report.weakenings += results[i].weakenings;
    report.instances += results[i].instances;
    report.premise_instances += results[i].premise_instances;
    if (results[i].failure) {
      results[i].failure->program_index = i;
      report.counterexamples.push_back(std::move(*results[i].failure));
    }
  }
  return report;
}

// }}}

// {{{ Correspondence

CorrespondenceReport check_correspondence(const Program& p, TVariant variant, std::size_t cap) {
  Prepared pp = prepare(p);
  check_signature_cap(pp.sig.size(), cap);
  CorrespondenceReport out;
  out.variant = variant;
  out.signature = pp.sig;
  TMinOptions opt;
  opt.variant = variant;
  opt.scope = TScope::kGlobal;
  out.t_minimal = t_minimal_models(pp.program, pp.sig.size(), opt, cap).models;
  out.equilibrium = eht::eems(pp.formula, pp.sig.size(), variant, cap);
  return out;
}

CorrespondenceCorpusReport run_correspondence(TVariant variant, const CorpusParams& params,
                                              unsigned jobs) {
  const std::vector<Program> corpus = random_corpus(params);
  std::vector<std::optional<CorrespondenceReport>> results(corpus.size());
  parallel_for(corpus.size(), jobs, [&](std::size_t i) {
    CorrespondenceReport r = check_correspondence(corpus[i], variant, params.atoms);
    if (!r.equal()) results[i] = std::move(r);
  });
  CorrespondenceCorpusReport out;
  out.params = params;
  out.programs = corpus.size();
  for (std::size_t i = 0; i < results.size(); ++i)
    if (results[i]) out.mismatches.push_back({i, to_string(corpus[i]), std::move(*results[i])});
  return out;
}

// }}}

// {{{ Divergence search

namespace {

std::vector<Collection> minus(const std::vector<Collection>& a, const std::vector<Collection>& b) {
  std::vector<Collection> out;
  for (const Collection& c : a)
    if (std::find(b.begin(), b.end(), c) == b.end()) out.push_back(c);
  return out;
}

std::vector<Divergence> divergences_of(const Program& p) {
  std::vector<Divergence> out;
  Prepared pp = prepare(p);
  for (TVariant v : {TVariant::kFunctional, TVariant::kRelational}) {
    TMinOptions opt;
    opt.variant = v;
    opt.scope = TScope::kPerPoint;
    auto perpoint = t_minimal_models(pp.program, pp.sig.size(), opt, kMaxCandidateAtoms).models;
    opt.scope = TScope::kGlobal;
    auto global = t_minimal_models(pp.program, pp.sig.size(), opt, kMaxCandidateAtoms).models;
    Divergence d;
    d.variant = v;
    d.signature = pp.sig;
    d.perpoint_only = minus(perpoint, global);
    d.global_only = minus(global, perpoint);
    if (d.perpoint_only.empty() && d.global_only.empty()) continue;
    for (const auto* side : {&d.perpoint_only, &d.global_only})
      for (const Collection& c : *side)
        if (is_t_minimal_perpoint(pp.program, c, v) == is_t_minimal_global(pp.program, c, v))
          throw std::logic_error("divergence witness does not re-verify");
    d.program = to_string(p);
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

DivergenceReport search_divergence(const CorpusParams& params, unsigned jobs) {
  const std::vector<Program> corpus = random_corpus(params);
  std::vector<std::vector<Divergence>> results(corpus.size());
  parallel_for(corpus.size(), jobs, [&](std::size_t i) { results[i] = divergences_of(corpus[i]); });
  DivergenceReport out;
  out.params = params;
  out.programs = corpus.size();
  for (std::size_t i = 0; i < results.size(); ++i)
    for (Divergence& d : results[i]) {
      d.program_index = i;
      out.divergences.push_back(std::move(d));
    }
  return out;
}

// }}}

}  // namespace easp
