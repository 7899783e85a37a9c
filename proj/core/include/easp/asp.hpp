// Disjunctive stable-model engine for modality-free programs, by exhaustive
// search over the 2^n valuations of the signature.

#pragma once

#include <vector>

#include "easp/classical.hpp"

namespace easp {

// Signatures above this size are refused by the exhaustive scans.
inline constexpr std::size_t kMaxAnswerSetAtoms = 20;

// Gelfond-Lifschitz reduct: every literal under naf is replaced by the truth
// constant it takes at t. The result is positive.
EncodedProgram gl_reduct(const EncodedProgram& p, Valuation t);

// Subset-minimal classical models of a positive program over n atoms.
std::vector<Valuation> minimal_models(const EncodedProgram& p, std::size_t atoms);

// t is an answer set iff t satisfies the reduct at t and no strict subset of
// t does. Sorted by mask.
std::vector<Valuation> answer_sets(const EncodedProgram& p, std::size_t atoms);
bool is_answer_set(const EncodedProgram& p, Valuation t);

// AST convenience: eliminates strong negation and uses the program signature.
struct AnswerSetResult {
  Signature signature;
  std::vector<Valuation> answer_sets;
};
AnswerSetResult answer_sets(const Program& p);

}  // namespace easp
