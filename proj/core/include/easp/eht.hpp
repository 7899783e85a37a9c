// Epistemic here-and-there logic: formulas, the translation of programs into
// theories, satisfaction on functional and relational models, and epistemic
// equilibrium models.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "easp/classical.hpp"
#include "easp/minimality.hpp"

namespace easp::eht {

enum class Op : std::uint8_t { kAtom, kBottom, kAnd, kOr, kImplies, kKnow, kPossible };

// Immutable formula tree. Negation and verum are derived: ~f is f -> #false
// and #true is #false -> #false.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula bottom();
  static Formula top();
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula neg(Formula a);
  static Formula know(Formula a);
  static Formula possible(Formula a);

  Op op() const { return node_->op; }
  const std::string& name() const { return node_->name; }
  const Formula& left() const { return node_->kids[0]; }
  const Formula& right() const { return node_->kids[1]; }
  const Formula& child() const { return node_->kids[0]; }

  bool operator==(const Formula& o) const;

 private:
  struct Node {
    Op op;
    std::string name;
    std::vector<Formula> kids;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Op op, std::string name, std::vector<Formula> kids);

  std::shared_ptr<const Node> node_;
};

std::string to_string(const Formula& f);

// Conjunction in order; the empty conjunction is #true.
Formula conjunction(const std::vector<Formula>& fs);

// Each rule becomes (body conjunction -> head disjunction) with `not` as ~,
// an empty head as #false and an empty body as #true; rules are conjoined in
// order. Throws on strong negation (eliminate it first) and on modality M.
Formula translate_rule(const Rule& r);
Formula translate_to_eht(const Program& p);

// Flat, hash-consed form with atoms resolved against a signature. Equal
// subformulas share one node.
class CompiledFormula {
 public:
  struct Node {
    Op op;
    std::uint8_t atom = 0;
    std::int32_t a = -1;
    std::int32_t b = -1;
  };

  CompiledFormula(const Formula& f, const Signature& sig);

  const std::vector<Node>& nodes() const { return nodes_; }
  std::int32_t root() const { return root_; }
  // K and Khat nodes, in node order.
  const std::vector<std::int32_t>& modal_nodes() const { return modal_; }

 private:
  std::int32_t add(const Formula& f, const Signature& sig);

  std::vector<Node> nodes_;
  std::vector<std::int32_t> modal_;
  std::int32_t root_ = -1;
};

struct HTPair {
  Valuation here;
  Valuation there;

  bool operator==(const HTPair&) const = default;
};

// Functional model <T, w>: pairs (w(T_i), T_i). The identity is allowed.
struct EHTModelF {
  Collection collection;
  WeakeningF w;

  EHTModelF(Collection c, WeakeningF weakening);
  static EHTModelF total(const Collection& c);
  std::vector<HTPair> pairs() const;
};

// Relational model {(H, T) : T phi H}: every there-valuation carries at least
// one pair; the underlying collection is the set of there-valuations.
struct EHTModelR {
  std::vector<HTPair> pairs;

  explicit EHTModelR(std::vector<HTPair> ps);
  static EHTModelR from(const Collection& c, const WeakeningR& r);
  Collection underlying() const;
  bool contains(const HTPair& p) const;
};

// Evaluates formulas on a set of pairs. K/Khat at the here level quantify
// over the pairs; at the total level over the there-valuations. Modal values
// are point-independent and cached per evaluator.
class Evaluator {
 public:
  Evaluator(const CompiledFormula& f, std::vector<HTPair> pairs);

  bool here(std::int32_t node, Valuation h, Valuation t);
  bool total(std::int32_t node, Valuation t);
  bool here(Valuation h, Valuation t) { return here(f_.root(), h, t); }
  bool total(Valuation t) { return total(f_.root(), t); }

  // Fixes the here-level value of each modal node (indexed like
  // CompiledFormula::modal_nodes(), bit j of `values`) instead of computing it.
  void assume_modal_values(std::uint64_t values);

 private:
  const CompiledFormula& f_;
  std::vector<HTPair> pairs_;
  std::vector<Valuation> theres_;
  std::vector<std::int8_t> here_modal_;
  std::vector<std::int8_t> total_modal_;
};

bool eht_sat_f(const EHTModelF& m, std::size_t i, const CompiledFormula& f);
// Throws std::invalid_argument if the pair is not in the model.
bool eht_sat_r(const EHTModelR& m, const HTPair& pair, const CompiledFormula& f);
bool is_total_model(const Collection& c, const CompiledFormula& f);

// c is a classical S5 model of f and every non-identity weakening model
// (functional or relational) refutes f at some point or pair.
bool is_eem(const CompiledFormula& f, const Collection& c, TVariant variant);
std::vector<Collection> eems(const CompiledFormula& f, std::size_t atoms, TVariant variant,
                             std::size_t cap = kDefaultSignatureCap, unsigned jobs = 1);

}  // namespace easp::eht
