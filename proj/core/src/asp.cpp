#include "easp/asp.hpp"

#include <stdexcept>

namespace easp {

namespace {

void require_modality_free(const EncodedProgram& p) {
  if (!p.is_modality_free())
    throw std::invalid_argument("subjective literals are not allowed in a nonepistemic program");
}

void require_small(std::size_t atoms) {
  if (atoms > kMaxAnswerSetAtoms)
    throw CapExceeded("exhaustive answer-set search is limited to " +
                      std::to_string(kMaxAnswerSetAtoms) + " atoms");
}

const ModalView kNoModalities{};

}  // namespace

EncodedProgram gl_reduct(const EncodedProgram& p, Valuation t) {
  require_modality_free(p);
  EncodedProgram out = p;
  for (EncodedRule& r : out.rules) {
    for (EncodedLiteral& l : r.body) {
      if (l.naf == 0) continue;
      bool v = holds(l, t, kNoModalities);
      l = EncodedLiteral{v ? LitKind::kTrue : LitKind::kFalse, 0, 0};
    }
  }
  return out;
}

std::vector<Valuation> minimal_models(const EncodedProgram& p, std::size_t atoms) {
  require_modality_free(p);
  require_small(atoms);
  if (!p.is_positive()) throw std::invalid_argument("minimal_models expects a positive program");
  std::vector<Valuation> models;
  const std::uint32_t limit = std::uint32_t{1} << atoms;
  // Increasing popcount is not needed: a model is minimal iff none of its
  // strict subsets is a model.
  for (std::uint32_t m = 0; m < limit; ++m)
    if (holds(p, Valuation{m}, kNoModalities)) models.emplace_back(m);
  std::vector<Valuation> out;
  for (Valuation m : models) {
    bool minimal = true;
    for (Valuation o : models)
      if (o.strict_subset_of(m)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(m);
  }
  return out;
}

bool is_answer_set(const EncodedProgram& p, Valuation t) {
  EncodedProgram red = gl_reduct(p, t);
  if (!holds(red, t, kNoModalities)) return false;
  // Strict submasks of t.
  for (std::uint32_t s = (t.bits - 1) & t.bits;; s = (s - 1) & t.bits) {
    if (s != t.bits && holds(red, Valuation{s}, kNoModalities)) return false;
    if (s == 0) break;
  }
  return true;
}

std::vector<Valuation> answer_sets(const EncodedProgram& p, std::size_t atoms) {
  require_modality_free(p);
  require_small(atoms);
  std::vector<Valuation> out;
  const std::uint32_t limit = std::uint32_t{1} << atoms;
  for (std::uint32_t m = 0; m < limit; ++m)
    if (is_answer_set(p, Valuation{m})) out.emplace_back(m);
  return out;
}

AnswerSetResult answer_sets(const Program& p) {
  Program plain = eliminate_strong_negation(p);
  AnswerSetResult r;
  r.signature = plain.signature();
  r.answer_sets = answer_sets(encode(plain, r.signature), r.signature.size());
  return r;
}

}  // namespace easp
