#include "easp/reducts.hpp"

namespace easp {

namespace {

EncodedLiteral constant(bool v) {
  return EncodedLiteral{v ? LitKind::kTrue : LitKind::kFalse, 0, 0};
}

// Shared head treatment of the ES94 and Kahl reducts. Returns false if the
// rule is satisfied by a subjective head literal and must be dropped.
bool reduce_head(EncodedRule& r, const ModalView& view) {
  std::vector<EncodedLiteral> head;
  for (const EncodedLiteral& l : r.head) {
    if (!l.is_subjective()) {
      head.push_back(l);
      continue;
    }
    if (holds(l, Valuation{}, view)) return false;
  }
  r.head = std::move(head);
  return true;
}

}  // namespace

void require_no_may(const EncodedProgram& p) {
  if (p.has_kind(LitKind::kMay))
    throw UnsupportedModality(
        "modality M is not available under EASP semantics (use Khat for the positive "
        "belief operator, or an ES94/Kahl semantics)");
}

void require_no_may(const Program& p) {
  if (p.has_modality(Modality::kMay))
    throw UnsupportedModality(
        "modality M is not available under EASP semantics (use Khat for the positive "
        "belief operator, or an ES94/Kahl semantics)");
}

EncodedProgram easp_reduct(const EncodedProgram& p, Valuation at, const ModalView& view) {
  require_no_may(p);
  EncodedProgram out = p;
  for (EncodedRule& r : out.rules)
    for (EncodedLiteral& l : r.body)
      if (l.naf > 0) l = constant(holds(l, at, view));
  return out;
}

EncodedProgram easp_reduct(const EncodedProgram& p, const PointedCollection& pc) {
  return easp_reduct(p, pc.valuation(), ModalView::of(pc.collection));
}

Program easp_reduct(const Program& p, const PointedCollection& pc, const Signature& sig) {
  return decode(easp_reduct(encode(p, sig), pc), sig);
}

EncodedProgram es94_reduct(const EncodedProgram& p, const Collection& c) {
  const ModalView view = ModalView::of(c);
  EncodedProgram out;
  for (EncodedRule r : p.rules) {
    if (!reduce_head(r, view)) continue;
    for (EncodedLiteral& l : r.body)
      if (l.is_subjective()) l = constant(holds(l, Valuation{}, view));
    out.rules.push_back(std::move(r));
  }
  return out;
}

Program es94_reduct(const Program& p, const Collection& c, const Signature& sig) {
  return decode(es94_reduct(encode(p, sig), c), sig);
}

EncodedProgram kahl_reduct(const EncodedProgram& p, const Collection& c) {
  const ModalView view = ModalView::of(c);
  EncodedProgram out;
  for (EncodedRule r : p.rules) {
    if (!reduce_head(r, view)) continue;
    for (EncodedLiteral& l : r.body) {
      if (!l.is_subjective()) continue;
      if (l.naf > 1)
        throw std::invalid_argument("Kahl's reduct is undefined for 'not not' on subjective literals");
      const bool g = holds(l, Valuation{}, view);  // truth of the whole literal G
      const EncodedLiteral obj{LitKind::kAtom, l.atom, 0};
      const bool know = l.kind == LitKind::kKnow;
      if (know && l.naf == 0) {
        l = g ? obj : constant(false);
      } else if (know) {
        l = g ? constant(true) : EncodedLiteral{LitKind::kAtom, l.atom, 1};
      } else if (l.naf == 0) {
        l = g ? constant(true) : EncodedLiteral{LitKind::kAtom, l.atom, 2};
      } else {
        l = g ? EncodedLiteral{LitKind::kAtom, l.atom, 1} : constant(false);
      }
    }
    out.rules.push_back(std::move(r));
  }
  return out;
}

Program kahl_reduct(const Program& p, const Collection& c, const Signature& sig) {
  return decode(kahl_reduct(encode(p, sig), c), sig);
}

}  // namespace easp
