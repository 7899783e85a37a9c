// Epistemic reducts: the naf-only EASP reduct, Gelfond's ES94 reduct and
// Kahl's refinement.

#pragma once

#include <stdexcept>

#include "easp/classical.hpp"

namespace easp {

// Raised when a program uses M under a semantics that only knows K and Khat.
class UnsupportedModality : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void require_no_may(const EncodedProgram& p);
void require_no_may(const Program& p);

// EASP reduct: every naf literal becomes the truth constant it takes at the
// pointed collection (objective literals at the designated valuation,
// subjective ones on the collection). Other literals are kept. Positive.
EncodedProgram easp_reduct(const EncodedProgram& p, const PointedCollection& pc);
// Same, with the objective part judged at `at` and modalities by `view`.
EncodedProgram easp_reduct(const EncodedProgram& p, Valuation at, const ModalView& view);
Program easp_reduct(const Program& p, const PointedCollection& pc, const Signature& sig);

// ES94: every subjective literal together with its naf prefix becomes a
// constant. A subjective head literal that holds makes the rule void (dropped);
// one that fails is removed from the head.
EncodedProgram es94_reduct(const EncodedProgram& p, const Collection& c);
Program es94_reduct(const Program& p, const Collection& c, const Signature& sig);

// Kahl's table:
//   K l      holds -> l            fails -> #false
//   not K l  holds -> #true        fails -> not l
//   M l      holds -> #true        fails -> not not l
//   not M l  holds -> not l        fails -> #false
// where "holds" refers to the whole literal G. Khat is treated as M. Heads as
// in es94_reduct.
EncodedProgram kahl_reduct(const EncodedProgram& p, const Collection& c);
Program kahl_reduct(const Program& p, const Collection& c, const Signature& sig);

}  // namespace easp
