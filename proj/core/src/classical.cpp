#include "easp/classical.hpp"

#include <algorithm>

namespace easp {

std::string to_string(Valuation v, const Signature& sig) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (!v.contains(i)) continue;
    if (!first) out += ",";
    out += sig.name(i);
    first = false;
  }
  return out + "}";
}

Valuation parse_valuation(const std::vector<std::string>& atoms, const Signature& sig) {
  Valuation v;
  for (const std::string& a : atoms) {
    auto i = sig.index_of(a);
    if (!i) throw std::invalid_argument("atom '" + a + "' is not in the signature");
    v.bits |= 1u << *i;
  }
  return v;
}

Collection::Collection(std::vector<Valuation> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("a collection needs at least one point");
}

Collection Collection::canonical() const {
  std::vector<Valuation> p = points_;
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  return Collection(std::move(p));
}

bool Collection::contains(Valuation v) const {
  return std::find(points_.begin(), points_.end(), v) != points_.end();
}

std::vector<std::vector<std::string>> to_atom_lists(const Collection& c, const Signature& sig) {
  std::vector<std::vector<std::string>> out;
  const Collection canon = c.canonical();
  for (Valuation v : canon.points()) {
    std::vector<std::string> atoms;
    for (std::size_t i = 0; i < sig.size(); ++i)
      if (v.contains(i)) atoms.push_back(sig.name(i));
    out.push_back(std::move(atoms));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Collection& c, const Signature& sig) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += to_string(c[i], sig);
  }
  return out + "}";
}

PointedCollection::PointedCollection(Collection c, std::size_t i)
    : collection(std::move(c)), point(i) {
  if (point >= collection.size()) throw std::out_of_range("point index out of range");
}

ModalView ModalView::of(const std::vector<Valuation>& points) {
  ModalView v{~0u, 0u};
  for (Valuation p : points) {
    v.known &= p.bits;
    v.possible |= p.bits;
  }
  return v;
}

ModalView ModalView::of(const Collection& c) { return of(c.points()); }

// {{{ Encoding

bool EncodedProgram::has_kind(LitKind k) const {
  for (const EncodedRule& r : rules) {
    for (const EncodedLiteral& l : r.head)
      if (l.kind == k) return true;
    for (const EncodedLiteral& l : r.body)
      if (l.kind == k) return true;
  }
  return false;
}

bool EncodedProgram::is_positive() const {
  for (const EncodedRule& r : rules)
    for (const EncodedLiteral& l : r.body)
      if (l.naf) return false;
  return true;
}

bool EncodedProgram::is_modality_free() const {
  return !has_kind(LitKind::kKnow) && !has_kind(LitKind::kPossible) && !has_kind(LitKind::kMay);
}

namespace {

std::uint8_t atom_index(const ObjLiteral& o, const Signature& sig) {
  if (o.strong_neg)
    throw std::invalid_argument("strong negation must be eliminated before evaluation (-" +
                                o.atom + ")");
  auto i = sig.index_of(o.atom);
  if (!i) throw std::invalid_argument("atom '" + o.atom + "' is not in the signature");
  if (*i >= kMaxAtoms) throw std::invalid_argument("signature too large");
  return static_cast<std::uint8_t>(*i);
}

EncodedLiteral encode_literal(const Literal& l, int naf, const Signature& sig) {
  EncodedLiteral e;
  e.naf = static_cast<std::uint8_t>(naf);
  if (auto* o = std::get_if<ObjLiteral>(&l)) {
    e.kind = LitKind::kAtom;
    e.atom = atom_index(*o, sig);
  } else if (auto* s = std::get_if<SubjLiteral>(&l)) {
    switch (s->modality) {
      case Modality::kKnow: e.kind = LitKind::kKnow; break;
      case Modality::kPossible: e.kind = LitKind::kPossible; break;
      case Modality::kMay: e.kind = LitKind::kMay; break;
    }
    e.atom = atom_index(s->inner, sig);
  } else {
    e.kind = std::get<Constant>(l).value ? LitKind::kTrue : LitKind::kFalse;
  }
  return e;
}

Literal decode_literal(const EncodedLiteral& e, const Signature& sig) {
  switch (e.kind) {
    case LitKind::kAtom: return ObjLiteral{sig.name(e.atom), false};
    case LitKind::kKnow: return SubjLiteral{Modality::kKnow, {sig.name(e.atom), false}};
    case LitKind::kPossible: return SubjLiteral{Modality::kPossible, {sig.name(e.atom), false}};
    case LitKind::kMay: return SubjLiteral{Modality::kMay, {sig.name(e.atom), false}};
    case LitKind::kTrue: return Constant{true};
    case LitKind::kFalse: return Constant{false};
  }
  return Constant{false};
}

}  // namespace

EncodedProgram encode(const Program& p, const Signature& sig) {
  EncodedProgram out;
  out.rules.reserve(p.rules.size());
  for (const Rule& r : p.rules) {
    EncodedRule er;
    for (const Literal& l : r.head) er.head.push_back(encode_literal(l, 0, sig));
    for (const ExtLiteral& e : r.body) er.body.push_back(encode_literal(e.base, e.naf_depth, sig));
    out.rules.push_back(std::move(er));
  }
  return out;
}

Program decode(const EncodedProgram& p, const Signature& sig) {
  Program out;
  for (const EncodedRule& r : p.rules) {
    Rule rule;
    for (const EncodedLiteral& l : r.head) rule.head.push_back(decode_literal(l, sig));
    for (const EncodedLiteral& l : r.body)
      rule.body.push_back(ExtLiteral{decode_literal(l, sig), l.naf, {}});
    out.rules.push_back(std::move(rule));
  }
  return out;
}

// }}}

bool holds(const EncodedLiteral& l, Valuation at, const ModalView& view) {
  bool v = false;
  switch (l.kind) {
    case LitKind::kAtom: v = at.contains(l.atom); break;
    case LitKind::kKnow: v = (view.known >> l.atom) & 1u; break;
    case LitKind::kPossible:
    case LitKind::kMay: v = (view.possible >> l.atom) & 1u; break;
    case LitKind::kTrue: v = true; break;
    case LitKind::kFalse: v = false; break;
  }
  return (l.naf & 1) ? !v : v;
}

bool holds(const EncodedRule& r, Valuation at, const ModalView& view) {
  for (const EncodedLiteral& l : r.body)
    if (!holds(l, at, view)) return true;
  for (const EncodedLiteral& l : r.head)
    if (holds(l, at, view)) return true;
  return false;
}

bool holds(const EncodedProgram& p, Valuation at, const ModalView& view) {
  for (const EncodedRule& r : p.rules)
    if (!holds(r, at, view)) return false;
  return true;
}

bool sat_ext_literal(const Collection& c, std::size_t i, const ExtLiteral& e, const Signature& sig) {
  if (i >= c.size()) throw std::out_of_range("point index out of range");
  return holds(encode_literal(e.base, e.naf_depth, sig), c[i], ModalView::of(c));
}

bool sat_program(const PointedCollection& pc, const EncodedProgram& p) {
  return holds(p, pc.valuation(), ModalView::of(pc.collection));
}

bool sat_program(const PointedCollection& pc, const Program& p, const Signature& sig) {
  return sat_program(pc, encode(p, sig));
}

bool is_classical_s5_model(const Collection& c, const EncodedProgram& p) {
  ModalView view = ModalView::of(c);
  for (Valuation v : c.points())
    if (!holds(p, v, view)) return false;
  return true;
}

bool is_classical_s5_model(const Collection& c, const Program& p, const Signature& sig) {
  return is_classical_s5_model(c, encode(p, sig));
}

void check_signature_cap(std::size_t atoms, std::size_t cap) {
  std::size_t limit = std::min(cap, kMaxCandidateAtoms);
  if (atoms > limit)
    throw CapExceeded("signature has " + std::to_string(atoms) + " atoms but the limit is " +
                      std::to_string(limit) +
                      " (the candidate space grows as 2^(2^n)); raise --max-signature "
                      "if the cap is the problem (hard limit " +
                      std::to_string(kMaxCandidateAtoms) + ")");
}

CandidateEnumerator::CandidateEnumerator(std::size_t atoms, std::size_t cap)
    : universe_(std::size_t{1} << std::min(atoms, kMaxCandidateAtoms)) {
  check_signature_cap(atoms, cap);
  combo_ = {0};
}

std::uint64_t CandidateEnumerator::count() const {
  if (universe_ >= 64) return ~std::uint64_t{0};
  return (std::uint64_t{1} << universe_) - 1;
}

bool CandidateEnumerator::next(Collection* out) {
  if (done_) return false;
  std::vector<Valuation> pts;
  pts.reserve(combo_.size());
  for (std::uint32_t v : combo_) pts.emplace_back(v);
  *out = Collection(std::move(pts));

  // Advance to the next k-combination of [0, universe) in lexicographic
  // order; after the last one move to k+1.
  const std::size_t k = combo_.size();
  std::size_t i = k;
  while (i > 0 && combo_[i - 1] == universe_ - k + (i - 1)) --i;
  if (i == 0) {
    if (k == universe_) {
      done_ = true;
    } else {
      combo_.resize(k + 1);
      for (std::size_t j = 0; j <= k; ++j) combo_[j] = static_cast<std::uint32_t>(j);
    }
  } else {
    ++combo_[i - 1];
    for (std::size_t j = i; j < k; ++j) combo_[j] = combo_[j - 1] + 1;
  }
  return true;
}

std::vector<Collection> enumerate_candidates(std::size_t atoms, std::size_t cap) {
  CandidateEnumerator e(atoms, cap);
  std::vector<Collection> out;
  Collection c{Valuation{}};
  while (e.next(&c)) out.push_back(c);
  return out;
}

}  // namespace easp
