// Valuations, S5 collections, the classical satisfaction relation and the
// candidate space searched by the solvers.
//
// Programs are evaluated in an encoded form where every atom is a bit index
// into the program signature. Valuations are bitmasks over that signature.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "easp/syntax.hpp"

namespace easp {

// Set of atoms as a bitmask over a Signature (bit i = signature.name(i)).
struct Valuation {
  std::uint32_t bits = 0;

  constexpr Valuation() = default;
  constexpr explicit Valuation(std::uint32_t b) : bits(b) {}

  constexpr bool contains(std::size_t atom) const { return (bits >> atom) & 1u; }
  constexpr bool subset_of(Valuation o) const { return (bits & ~o.bits) == 0; }
  constexpr bool strict_subset_of(Valuation o) const { return subset_of(o) && bits != o.bits; }
  int size() const { return __builtin_popcount(bits); }

  constexpr auto operator<=>(const Valuation&) const = default;
};

// Largest signature the bitmask representation can hold.
inline constexpr std::size_t kMaxAtoms = 31;

std::string to_string(Valuation v, const Signature& sig);
Valuation parse_valuation(const std::vector<std::string>& atoms, const Signature& sig);

// Nonempty indexed family of valuations. The same valuation may occur at
// several indices (weakened collections keep point identity).
class Collection {
 public:
  explicit Collection(std::vector<Valuation> points);
  Collection(std::initializer_list<Valuation> points)
      : Collection(std::vector<Valuation>(points)) {}

  std::size_t size() const { return points_.size(); }
  Valuation operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Valuation>& points() const { return points_; }

  // Sorted, duplicate-free set of the underlying valuations.
  Collection canonical() const;
  bool contains(Valuation v) const;

  bool operator==(const Collection&) const = default;
  auto operator<=>(const Collection& o) const;

 private:
  std::vector<Valuation> points_;
};

// Canonical order: by number of points, then lexicographic on the points.
inline auto Collection::operator<=>(const Collection& o) const {
  if (auto c = points_.size() <=> o.points_.size(); c != 0) return c;
  return points_ <=> o.points_;
}

std::string to_string(const Collection& c, const Signature& sig);
// Sorted arrays of sorted atom names; the empty valuation renders as [].
std::vector<std::vector<std::string>> to_atom_lists(const Collection& c, const Signature& sig);

struct PointedCollection {
  Collection collection;
  std::size_t point = 0;

  PointedCollection(Collection c, std::size_t i);
  Valuation valuation() const { return collection[point]; }
};

// What a collection says about K and Khat/M: the atoms true at every point and
// the atoms true at some point. Subjective literals depend on nothing else.
struct ModalView {
  std::uint32_t known = 0;
  std::uint32_t possible = 0;

  static ModalView of(const Collection& c);
  static ModalView of(const std::vector<Valuation>& points);
  bool operator==(const ModalView&) const = default;
};

// {{{ Encoded programs

enum class LitKind : std::uint8_t { kAtom, kKnow, kPossible, kMay, kTrue, kFalse };

struct EncodedLiteral {
  LitKind kind = LitKind::kTrue;
  std::uint8_t atom = 0;
  std::uint8_t naf = 0;

  bool is_subjective() const {
    return kind == LitKind::kKnow || kind == LitKind::kPossible || kind == LitKind::kMay;
  }
  bool operator==(const EncodedLiteral&) const = default;
};

struct EncodedRule {
  std::vector<EncodedLiteral> head;
  std::vector<EncodedLiteral> body;

  bool operator==(const EncodedRule&) const = default;
};

struct EncodedProgram {
  std::vector<EncodedRule> rules;

  bool operator==(const EncodedProgram&) const = default;
  bool has_kind(LitKind k) const;
  bool is_positive() const;
  bool is_modality_free() const;
};

// Throws std::invalid_argument on strong negation or atoms outside sig.
EncodedProgram encode(const Program& p, const Signature& sig);
Program decode(const EncodedProgram& p, const Signature& sig);

// }}}

// Satisfaction of one literal at valuation `at` under the modal view of the
// collection. Each naf flips the result.
bool holds(const EncodedLiteral& l, Valuation at, const ModalView& view);
bool holds(const EncodedRule& r, Valuation at, const ModalView& view);
bool holds(const EncodedProgram& p, Valuation at, const ModalView& view);

bool sat_ext_literal(const Collection& c, std::size_t i, const ExtLiteral& e, const Signature& sig);
bool sat_program(const PointedCollection& pc, const Program& p, const Signature& sig);
bool sat_program(const PointedCollection& pc, const EncodedProgram& p);
bool is_classical_s5_model(const Collection& c, const Program& p, const Signature& sig);
bool is_classical_s5_model(const Collection& c, const EncodedProgram& p);

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest signature for which the 2^(2^n)-1 candidate space can be indexed.
inline constexpr std::size_t kMaxCandidateAtoms = 5;
inline constexpr std::size_t kDefaultSignatureCap = 4;

void check_signature_cap(std::size_t atoms, std::size_t cap);

// Every nonempty set of subsets of an n-atom signature, once, in canonical
// order (size, then lexicographic on the sorted valuation masks).
class CandidateEnumerator {
 public:
  explicit CandidateEnumerator(std::size_t atoms, std::size_t cap = kDefaultSignatureCap);

  // 2^(2^n) - 1.
  std::uint64_t count() const;
  bool next(Collection* out);

 private:
  std::size_t universe_;  // 2^n valuations
  std::vector<std::uint32_t> combo_;
  bool done_ = false;
};

std::vector<Collection> enumerate_candidates(std::size_t atoms,
                                             std::size_t cap = kDefaultSignatureCap);

// Bits of all atoms of an n-atom signature.
inline std::uint32_t full_mask(std::size_t atoms) {
  return atoms >= 32 ? ~0u : ((1u << atoms) - 1u);
}

}  // namespace easp
