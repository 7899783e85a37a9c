// Abstract syntax of epistemic logic programs, the text front end, and the
// canonical printer.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace easp {

// K (known), Khat (possible, positive), M (may be true, the ES94 dual of K).
enum class Modality { kKnow, kPossible, kMay };

struct SourcePos {
  int line = 0;
  int column = 0;
};

struct ObjLiteral {
  std::string atom;
  bool strong_neg = false;

  bool operator==(const ObjLiteral&) const = default;
};

struct SubjLiteral {
  Modality modality = Modality::kKnow;
  ObjLiteral inner;

  bool operator==(const SubjLiteral&) const = default;
};

// Truth constant. Never written by users directly except as #true/#false; it
// is how reducts represent replaced literals.
struct Constant {
  bool value = true;

  bool operator==(const Constant&) const = default;
};

using Literal = std::variant<ObjLiteral, SubjLiteral, Constant>;

struct ExtLiteral {
  Literal base;
  int naf_depth = 0;
  SourcePos pos;

  // Positions do not take part in equality.
  bool operator==(const ExtLiteral& o) const {
    return base == o.base && naf_depth == o.naf_depth;
  }
};

struct Rule {
  std::vector<Literal> head;  // empty: constraint (head is falsum)
  std::vector<ExtLiteral> body;  // empty: fact
  SourcePos pos;

  bool operator==(const Rule& o) const {
    return head == o.head && body == o.body;
  }
  bool is_constraint() const { return head.empty(); }
  bool is_fact() const { return body.empty(); }
};

// Sorted, duplicate-free list of atom names. Position in the list is the bit
// index used by valuations.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<std::string> atoms);

  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::string& name(std::size_t i) const { return atoms_[i]; }
  std::optional<std::size_t> index_of(std::string_view atom) const;
  bool contains(std::string_view atom) const { return index_of(atom).has_value(); }

  bool operator==(const Signature&) const = default;

 private:
  std::vector<std::string> atoms_;
};

struct Program {
  std::vector<Rule> rules;

  bool operator==(const Program&) const = default;

  // Exactly the atoms occurring in the rules (strong negation stripped).
  Signature signature() const;
  bool has_strong_negation() const;
  bool has_modality(Modality m) const;
  bool has_subjective_literal() const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, SourcePos pos);
  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

bool is_identifier(std::string_view s);

// Grammar: see README. `not not` is accepted on objective literals only.
Program parse_program(std::string_view text);
Program parse_program_file(const std::string& path);

// Every -q becomes a fresh atom neg_q and a constraint ":- q, neg_q." is
// appended per rewritten atom (in signature order). If neg_q already names an
// atom of the program, a warning is recorded and a numeric suffix is added.
Program eliminate_strong_negation(const Program& p,
                                  std::vector<std::string>* warnings = nullptr);

// Drops rules whose body contains a false conjunct and removes true
// conjuncts; constant naf literals are evaluated first. Literals and rules are
// otherwise kept in order.
Program simplify(const Program& p);

std::string to_string(Modality m);
std::string to_string(const ObjLiteral& l);
std::string to_string(const Literal& l);
std::string to_string(const ExtLiteral& l);
std::string to_string(const Rule& r);
// One rule per line, each terminated by '\n'.
std::string to_string(const Program& p);

}  // namespace easp
