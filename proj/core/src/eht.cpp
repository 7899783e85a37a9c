#include "easp/eht.hpp"

#include <algorithm>
#include <stdexcept>

#include "easp/parallel.hpp"
#include "easp/reducts.hpp"

namespace easp::eht {

// {{{ Formulas

Formula Formula::make(Op op, std::string name, std::vector<Formula> kids) {
  return Formula(std::make_shared<const Node>(Node{op, std::move(name), std::move(kids)}));
}

Formula Formula::atom(std::string name) { return make(Op::kAtom, std::move(name), {}); }
Formula Formula::bottom() { return make(Op::kBottom, "", {}); }
Formula Formula::top() { return implies(bottom(), bottom()); }
Formula Formula::conj(Formula a, Formula b) { return make(Op::kAnd, "", {std::move(a), std::move(b)}); }
Formula Formula::disj(Formula a, Formula b) { return make(Op::kOr, "", {std::move(a), std::move(b)}); }
Formula Formula::implies(Formula a, Formula b) {
  return make(Op::kImplies, "", {std::move(a), std::move(b)});
}
Formula Formula::neg(Formula a) { return implies(std::move(a), bottom()); }
Formula Formula::know(Formula a) { return make(Op::kKnow, "", {std::move(a)}); }
Formula Formula::possible(Formula a) { return make(Op::kPossible, "", {std::move(a)}); }

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  return node_->op == o.node_->op && node_->name == o.node_->name && node_->kids == o.node_->kids;
}

namespace {

bool is_bottom(const Formula& f) { return f.op() == Op::kBottom; }

}  // namespace

std::string to_string(const Formula& f) {
  switch (f.op()) {
    case Op::kAtom: return f.name();
    case Op::kBottom: return "#false";
    case Op::kKnow: return "K " + to_string(f.child());
    case Op::kPossible: return "Khat " + to_string(f.child());
    case Op::kAnd: return "(" + to_string(f.left()) + " & " + to_string(f.right()) + ")";
    case Op::kOr: return "(" + to_string(f.left()) + " | " + to_string(f.right()) + ")";
    case Op::kImplies:
      if (is_bottom(f.right())) {
        if (is_bottom(f.left())) return "#true";
        return "~" + to_string(f.left());
      }
      return "(" + to_string(f.left()) + " -> " + to_string(f.right()) + ")";
  }
  return "?";
}

Formula conjunction(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::top();
  Formula out = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = Formula::conj(out, fs[i]);
  return out;
}

namespace {

Formula translate_objective(const ObjLiteral& o) {
  if (o.strong_neg)
    throw std::invalid_argument("strong negation must be eliminated before translation (-" +
                                o.atom + ")");
  return Formula::atom(o.atom);
}

Formula translate_literal(const Literal& l) {
  if (auto* o = std::get_if<ObjLiteral>(&l)) return translate_objective(*o);
  if (auto* s = std::get_if<SubjLiteral>(&l)) {
    switch (s->modality) {
      case Modality::kKnow: return Formula::know(translate_objective(s->inner));
      case Modality::kPossible: return Formula::possible(translate_objective(s->inner));
      case Modality::kMay:
        throw UnsupportedModality("modality M has no counterpart in the epistemic logic");
    }
  }
  return std::get<Constant>(l).value ? Formula::top() : Formula::bottom();
}

}  // namespace

Formula translate_rule(const Rule& r) {
  std::vector<Formula> body;
  for (const ExtLiteral& e : r.body) {
    Formula f = translate_literal(e.base);
    for (int i = 0; i < e.naf_depth; ++i) f = Formula::neg(f);
    body.push_back(std::move(f));
  }
  Formula head = Formula::bottom();
  if (!r.head.empty()) {
    head = translate_literal(r.head.front());
    for (std::size_t i = 1; i < r.head.size(); ++i)
      head = Formula::disj(head, translate_literal(r.head[i]));
  }
  return Formula::implies(conjunction(body), head);
}

Formula translate_to_eht(const Program& p) {
  std::vector<Formula> rules;
  for (const Rule& r : p.rules) rules.push_back(translate_rule(r));
  return conjunction(rules);
}

// }}}

// {{{ Compilation

CompiledFormula::CompiledFormula(const Formula& f, const Signature& sig) {
  root_ = add(f, sig);
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].op == Op::kKnow || nodes_[i].op == Op::kPossible)
      modal_.push_back(static_cast<std::int32_t>(i));
}

std::int32_t CompiledFormula::add(const Formula& f, const Signature& sig) {
  // Children are added first, so a node always follows its subformulas.
  Node n{f.op()};
  switch (f.op()) {
    case Op::kAtom: {
      auto i = sig.index_of(f.name());
      if (!i) throw std::invalid_argument("atom '" + f.name() + "' is not in the signature");
      if (*i >= kMaxAtoms) throw std::invalid_argument("signature too large");
      n.atom = static_cast<std::uint8_t>(*i);
      break;
    }
    case Op::kBottom: break;
    case Op::kKnow:
    case Op::kPossible: n.a = add(f.child(), sig); break;
    default:
      n.a = add(f.left(), sig);
      n.b = add(f.right(), sig);
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& m = nodes_[i];
    if (m.op == n.op && m.atom == n.atom && m.a == n.a && m.b == n.b)
      return static_cast<std::int32_t>(i);
  }
  nodes_.push_back(n);
  return static_cast<std::int32_t>(nodes_.size() - 1);
}

// }}}

// {{{ Models

EHTModelF::EHTModelF(Collection c, WeakeningF weakening)
    : collection(std::move(c)), w(std::move(weakening)) {
  if (w.image.size() != collection.size())
    throw std::invalid_argument("weakening must map every point");
  for (std::size_t i = 0; i < collection.size(); ++i)
    if (!w.image[i].subset_of(collection[i]))
      throw std::invalid_argument("weakening must map each point to a subset");
}

EHTModelF EHTModelF::total(const Collection& c) { return EHTModelF(c, WeakeningF{c.points()}); }

std::vector<HTPair> EHTModelF::pairs() const {
  std::vector<HTPair> out;
  for (std::size_t i = 0; i < collection.size(); ++i) out.push_back({w.image[i], collection[i]});
  return out;
}

EHTModelR::EHTModelR(std::vector<HTPair> ps) : pairs(std::move(ps)) {
  if (pairs.empty()) throw std::invalid_argument("a model needs at least one pair");
  for (const HTPair& p : pairs)
    if (!p.here.subset_of(p.there)) throw std::invalid_argument("here must be a subset of there");
}

EHTModelR EHTModelR::from(const Collection& c, const WeakeningR& r) {
  if (r.images.size() != c.size()) throw std::invalid_argument("weakening must map every point");
  std::vector<HTPair> ps;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (r.images[i].empty()) throw std::invalid_argument("weakening must be serial");
    for (Valuation h : r.images[i]) ps.push_back({h, c[i]});
  }
  return EHTModelR(std::move(ps));
}

Collection EHTModelR::underlying() const {
  std::vector<Valuation> ts;
  for (const HTPair& p : pairs) ts.push_back(p.there);
  return Collection(std::move(ts)).canonical();
}

bool EHTModelR::contains(const HTPair& p) const {
  return std::find(pairs.begin(), pairs.end(), p) != pairs.end();
}

// }}}

// {{{ Evaluation

Evaluator::Evaluator(const CompiledFormula& f, std::vector<HTPair> pairs)
    : f_(f),
      pairs_(std::move(pairs)),
      here_modal_(f.nodes().size(), -1),
      total_modal_(f.nodes().size(), -1) {
  for (const HTPair& p : pairs_) theres_.push_back(p.there);
  std::sort(theres_.begin(), theres_.end());
  theres_.erase(std::unique(theres_.begin(), theres_.end()), theres_.end());
}

void Evaluator::assume_modal_values(std::uint64_t values) {
  const auto& modal = f_.modal_nodes();
  for (std::size_t j = 0; j < modal.size(); ++j) here_modal_[modal[j]] = (values >> j) & 1u;
}

bool Evaluator::total(std::int32_t node, Valuation t) {
  const CompiledFormula::Node& n = f_.nodes()[node];
  switch (n.op) {
    case Op::kAtom: return t.contains(n.atom);
    case Op::kBottom: return false;
    case Op::kAnd: return total(n.a, t) && total(n.b, t);
    case Op::kOr: return total(n.a, t) || total(n.b, t);
    case Op::kImplies: return !total(n.a, t) || total(n.b, t);
    case Op::kKnow:
    case Op::kPossible: {
      std::int8_t& cached = total_modal_[node];
      if (cached < 0) {
        auto sat = [&](Valuation u) { return total(n.a, u); };
        cached = n.op == Op::kKnow ? std::all_of(theres_.begin(), theres_.end(), sat)
                                   : std::any_of(theres_.begin(), theres_.end(), sat);
      }
      return cached;
    }
  }
  return false;
}

bool Evaluator::here(std::int32_t node, Valuation h, Valuation t) {
  const CompiledFormula::Node& n = f_.nodes()[node];
  switch (n.op) {
    case Op::kAtom: return h.contains(n.atom);
    case Op::kBottom: return false;
    case Op::kAnd: return here(n.a, h, t) && here(n.b, h, t);
    case Op::kOr: return here(n.a, h, t) || here(n.b, h, t);
    case Op::kImplies:
      return (!here(n.a, h, t) || here(n.b, h, t)) && (!total(n.a, t) || total(n.b, t));
    case Op::kKnow:
    case Op::kPossible: {
      std::int8_t& cached = here_modal_[node];
      if (cached < 0) {
        auto sat = [&](const HTPair& p) { return here(n.a, p.here, p.there); };
        cached = n.op == Op::kKnow ? std::all_of(pairs_.begin(), pairs_.end(), sat)
                                   : std::any_of(pairs_.begin(), pairs_.end(), sat);
      }
      return cached;
    }
  }
  return false;
}

bool eht_sat_f(const EHTModelF& m, std::size_t i, const CompiledFormula& f) {
  if (i >= m.collection.size()) throw std::out_of_range("point index out of range");
  Evaluator ev(f, m.pairs());
  return ev.here(m.w.image[i], m.collection[i]);
}

bool eht_sat_r(const EHTModelR& m, const HTPair& pair, const CompiledFormula& f) {
  if (!m.contains(pair)) throw std::invalid_argument("pair is not in the model");
  Evaluator ev(f, m.pairs);
  return ev.here(pair.here, pair.there);
}

bool is_total_model(const Collection& c, const CompiledFormula& f) {
  std::vector<HTPair> ps;
  for (Valuation t : c.points()) ps.push_back({t, t});
  Evaluator ev(f, ps);
  return std::all_of(c.points().begin(), c.points().end(),
                     [&](Valuation t) { return ev.total(t); });
}

// }}}

// {{{ Equilibrium models

namespace {

// Every w != id over the points of c; a non-identity model satisfying f at
// every point is a counterexample.
bool eem_functional(const CompiledFormula& f, const Collection& c) {
  const std::size_t n = c.size();
  std::vector<std::uint32_t> h(n, 0);
  for (;;) {
    bool identity = true;
    std::vector<HTPair> ps(n);
    for (std::size_t i = 0; i < n; ++i) {
      ps[i] = {Valuation{h[i]}, c[i]};
      identity &= h[i] == c[i].bits;
    }
    if (!identity) {
      Evaluator ev(f, ps);
      bool all = std::all_of(ps.begin(), ps.end(),
                             [&](const HTPair& p) { return ev.here(p.here, p.there); });
      if (all) return false;
    }
    // Odometer over submasks of each point.
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (h[i] != c[i].bits) {
        h[i] = ((h[i] | ~c[i].bits) + 1) & c[i].bits;
        break;
      }
      h[i] = 0;
    }
    if (i == n) return true;
  }
}

// Guess the here-level value of every modal subformula. Under a fixed guess,
// pairs that satisfy f and the universal side of the guess can all be taken
// together, and taking more only helps the existential side, so the maximal
// choice is a witness if any model with these values is.
bool eem_relational(const CompiledFormula& f, const Collection& c) {
  const auto& modal = f.modal_nodes();
  if (modal.size() > 20) throw CapExceeded("too many modal subformulas for the relational check");
  const std::uint64_t guesses = std::uint64_t{1} << modal.size();
  std::vector<HTPair> universe;
  for (Valuation t : c.points())
    for (std::uint32_t s = t.bits;; s = (s - 1) & t.bits) {
      universe.push_back({Valuation{s}, t});
      if (s == 0) break;
    }
  for (std::uint64_t g = 0; g < guesses; ++g) {
    Evaluator guessed(f, universe);
    guessed.assume_modal_values(g);
    std::vector<HTPair> chosen;
    for (const HTPair& p : universe) {
      if (!guessed.here(p.here, p.there)) continue;
      bool fits = true;
      for (std::size_t j = 0; j < modal.size() && fits; ++j) {
        const auto& n = f.nodes()[modal[j]];
        const bool v = (g >> j) & 1u;
        if (n.op == Op::kKnow && v) fits = guessed.here(n.a, p.here, p.there);
        if (n.op == Op::kPossible && !v) fits = !guessed.here(n.a, p.here, p.there);
      }
      if (fits) chosen.push_back(p);
    }
    bool serial = std::all_of(c.points().begin(), c.points().end(), [&](Valuation t) {
      return std::any_of(chosen.begin(), chosen.end(),
                         [&](const HTPair& p) { return p.there == t; });
    });
    bool strict = std::any_of(chosen.begin(), chosen.end(),
                              [](const HTPair& p) { return p.here != p.there; });
    if (!serial || !strict) continue;
    Evaluator actual(f, chosen);
    if (std::all_of(chosen.begin(), chosen.end(),
                    [&](const HTPair& p) { return actual.here(p.here, p.there); }))
      return false;
  }
  return true;
}

}  // namespace

bool is_eem(const CompiledFormula& f, const Collection& c_in, TVariant variant) {
  const Collection c = c_in.canonical();
  if (!is_total_model(c, f)) return false;
  return variant == TVariant::kFunctional ? eem_functional(f, c) : eem_relational(f, c);
}

std::vector<Collection> eems(const CompiledFormula& f, std::size_t atoms, TVariant variant,
                             std::size_t cap, unsigned jobs) {
  std::vector<Collection> candidates = enumerate_candidates(atoms, cap);
  std::vector<char> keep(candidates.size(), 0);
  parallel_for(candidates.size(), jobs,
               [&](std::size_t i) { keep[i] = is_eem(f, candidates[i], variant); });
  std::vector<Collection> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (keep[i]) out.push_back(std::move(candidates[i]));
  return out;
}

// }}}

}  // namespace easp::eht
