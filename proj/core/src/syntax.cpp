#include "easp/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace easp {

Signature::Signature(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
}

std::optional<std::size_t> Signature::index_of(std::string_view atom) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom);
  if (it == atoms_.end() || *it != atom) return std::nullopt;
  return static_cast<std::size_t>(it - atoms_.begin());
}

namespace {

const ObjLiteral* objective_of(const Literal& l) {
  if (auto* o = std::get_if<ObjLiteral>(&l)) return o;
  if (auto* s = std::get_if<SubjLiteral>(&l)) return &s->inner;
  return nullptr;
}

template <typename Fn>
void for_each_literal(const Program& p, Fn&& fn) {
  for (const Rule& r : p.rules) {
    for (const Literal& l : r.head) fn(l);
    for (const ExtLiteral& e : r.body) fn(e.base);
  }
}

}  // namespace

Signature Program::signature() const {
  std::vector<std::string> atoms;
  for_each_literal(*this, [&](const Literal& l) {
    if (const ObjLiteral* o = objective_of(l)) atoms.push_back(o->atom);
  });
  return Signature(std::move(atoms));
}

bool Program::has_strong_negation() const {
  bool found = false;
  for_each_literal(*this, [&](const Literal& l) {
    if (const ObjLiteral* o = objective_of(l)) found |= o->strong_neg;
  });
  return found;
}

bool Program::has_modality(Modality m) const {
  bool found = false;
  for_each_literal(*this, [&](const Literal& l) {
    if (auto* s = std::get_if<SubjLiteral>(&l)) found |= s->modality == m;
  });
  return found;
}

bool Program::has_subjective_literal() const {
  bool found = false;
  for_each_literal(*this, [&](const Literal& l) {
    found |= std::holds_alternative<SubjLiteral>(l);
  });
  return found;
}

ParseError::ParseError(const std::string& what, SourcePos pos)
    : std::runtime_error(std::to_string(pos.line) + ":" +
                         std::to_string(pos.column) + ": " + what),
      pos_(pos) {}

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// {{{ Lexer and parser

namespace {

enum class Tok {
  kIdent, kKnow, kPossible, kMay, kNot, kMinus, kBar, kComma, kIf, kDot,
  kTrue, kFalse, kEnd
};

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::kEnd) return "end of input";
  return "'" + t.text + "'";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      SourcePos pos{line_, col_};
      if (i_ >= text_.size()) {
        out.push_back({Tok::kEnd, "", pos});
        return out;
      }
      char c = text_[i_];
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string word = take_word();
        if (word == "K" && peek() == '^') {
          advance();
          out.push_back({Tok::kPossible, "K^", pos});
        } else if (word == "K") {
          out.push_back({Tok::kKnow, word, pos});
        } else if (word == "Khat") {
          out.push_back({Tok::kPossible, word, pos});
        } else if (word == "M") {
          out.push_back({Tok::kMay, word, pos});
        } else if (word == "not") {
          out.push_back({Tok::kNot, word, pos});
        } else if (is_identifier(word)) {
          out.push_back({Tok::kIdent, word, pos});
        } else {
          throw ParseError("invalid atom name '" + word +
                               "' (atoms start with a lowercase letter)",
                           pos);
        }
        continue;
      }
      switch (c) {
        case '-': advance(); out.push_back({Tok::kMinus, "-", pos}); break;
        case '|': advance(); out.push_back({Tok::kBar, "|", pos}); break;
        case ',': advance(); out.push_back({Tok::kComma, ",", pos}); break;
        case '.': advance(); out.push_back({Tok::kDot, ".", pos}); break;
        case ':':
          advance();
          if (peek() != '-') throw ParseError("expected ':-'", pos);
          advance();
          out.push_back({Tok::kIf, ":-", pos});
          break;
        case '#': {
          advance();
          std::string word = take_word();
          if (word == "true") {
            out.push_back({Tok::kTrue, "#true", pos});
          } else if (word == "false") {
            out.push_back({Tok::kFalse, "#false", pos});
          } else {
            throw ParseError("unknown directive '#" + word + "'", pos);
          }
          break;
        }
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", pos);
      }
    }
  }

 private:
  char peek() const { return i_ < text_.size() ? text_[i_] : '\0'; }

  void advance() {
    if (text_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void skip_space() {
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (c == '%') {
        while (i_ < text_.size() && text_[i_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string take_word() {
    std::string w;
    while (i_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_')) {
      w += text_[i_];
      advance();
    }
    return w;
  }

  std::string_view text_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program run() {
    Program p;
    while (cur().kind != Tok::kEnd) p.rules.push_back(rule());
    return p;
  }

 private:
  const Token& cur() const { return toks_[i_]; }
  Token take() { return toks_[i_++]; }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError("expected " + expected + ", found " + describe(cur()), cur().pos);
  }

  void expect(Tok kind, const std::string& what) {
    if (cur().kind != kind) fail(what);
    ++i_;
  }

  Rule rule() {
    Rule r;
    r.pos = cur().pos;
    if (cur().kind == Tok::kIf) {
      ++i_;
      r.body = body();
    } else {
      r.head.push_back(head_literal());
      while (cur().kind == Tok::kBar) {
        ++i_;
        r.head.push_back(head_literal());
      }
      if (cur().kind == Tok::kIf) {
        ++i_;
        r.body = body();
      }
    }
    expect(Tok::kDot, "'.'");
    return r;
  }

  Literal head_literal() {
    if (cur().kind == Tok::kNot)
      throw ParseError("'not' is not allowed in rule heads", cur().pos);
    if (cur().kind == Tok::kTrue || cur().kind == Tok::kFalse)
      throw ParseError("truth constants are not allowed in rule heads", cur().pos);
    return literal();
  }

  std::vector<ExtLiteral> body() {
    std::vector<ExtLiteral> out;
    out.push_back(body_literal());
    while (cur().kind == Tok::kComma) {
      ++i_;
      out.push_back(body_literal());
    }
    return out;
  }

  ExtLiteral body_literal() {
    ExtLiteral e;
    e.pos = cur().pos;
    while (cur().kind == Tok::kNot) {
      ++i_;
      ++e.naf_depth;
    }
    if (e.naf_depth > 2)
      throw ParseError("at most two 'not' may precede a literal", e.pos);
    if (cur().kind == Tok::kTrue || cur().kind == Tok::kFalse) {
      e.base = Constant{take().kind == Tok::kTrue};
    } else {
      e.base = literal();
    }
    if (e.naf_depth == 2 && std::holds_alternative<SubjLiteral>(e.base))
      throw ParseError("'not not' is only allowed on objective literals", e.pos);
    return e;
  }

  Literal literal() {
    std::optional<Modality> mod;
    switch (cur().kind) {
      case Tok::kKnow: mod = Modality::kKnow; break;
      case Tok::kPossible: mod = Modality::kPossible; break;
      case Tok::kMay: mod = Modality::kMay; break;
      default: break;
    }
    if (mod) ++i_;
    ObjLiteral o;
    if (cur().kind == Tok::kMinus) {
      ++i_;
      o.strong_neg = true;
    }
    if (cur().kind != Tok::kIdent) fail("an atom");
    o.atom = take().text;
    if (mod) return SubjLiteral{*mod, std::move(o)};
    return o;
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

Program parse_program(std::string_view text) {
  return Parser(Lexer(text).run()).run();
}

Program parse_program_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_program(ss.str());
}

// }}}

Program eliminate_strong_negation(const Program& p, std::vector<std::string>* warnings) {
  Signature sig = p.signature();
  std::set<std::string> taken(sig.atoms().begin(), sig.atoms().end());
  std::set<std::string> negated;
  for_each_literal(p, [&](const Literal& l) {
    if (const ObjLiteral* o = objective_of(l); o && o->strong_neg) negated.insert(o->atom);
  });
  if (negated.empty()) return p;

  std::vector<std::pair<std::string, std::string>> fresh;  // atom -> replacement
  for (const std::string& atom : negated) {
    std::string name = "neg_" + atom;
    if (taken.count(name)) {
      if (warnings)
        warnings->push_back("atom '" + name + "' already occurs in the program; "
                            "using a suffixed name for -" + atom);
      for (int k = 1; taken.count(name); ++k) name = "neg_" + atom + "_" + std::to_string(k);
    }
    taken.insert(name);
    fresh.emplace_back(atom, name);
  }
  auto replacement = [&](const std::string& atom) -> const std::string& {
    for (const auto& [a, n] : fresh)
      if (a == atom) return n;
    throw std::logic_error("no replacement for " + atom);
  };
  auto rewrite = [&](ObjLiteral& o) {
    if (!o.strong_neg) return;
    o.atom = replacement(o.atom);
    o.strong_neg = false;
  };
  auto rewrite_literal = [&](Literal& l) {
    if (auto* o = std::get_if<ObjLiteral>(&l)) rewrite(*o);
    if (auto* s = std::get_if<SubjLiteral>(&l)) rewrite(s->inner);
  };

  Program out = p;
  for (Rule& r : out.rules) {
    for (Literal& l : r.head) rewrite_literal(l);
    for (ExtLiteral& e : r.body) rewrite_literal(e.base);
  }
  for (const auto& [atom, name] : fresh) {
    Rule c;
    c.body.push_back(ExtLiteral{ObjLiteral{atom, false}, 0, {}});
    c.body.push_back(ExtLiteral{ObjLiteral{name, false}, 0, {}});
    out.rules.push_back(std::move(c));
  }
  return out;
}

Program simplify(const Program& p) {
  Program out;
  for (const Rule& r : p.rules) {
    Rule s;
    s.head = r.head;
    s.pos = r.pos;
    bool dead = false;
    for (const ExtLiteral& e : r.body) {
      if (auto* c = std::get_if<Constant>(&e.base)) {
        bool value = (e.naf_depth % 2 == 0) ? c->value : !c->value;
        if (!value) {
          dead = true;
          break;
        }
        continue;
      }
      s.body.push_back(e);
    }
    if (!dead) out.rules.push_back(std::move(s));
  }
  return out;
}

std::string to_string(Modality m) {
  switch (m) {
    case Modality::kKnow: return "K";
    case Modality::kPossible: return "Khat";
    case Modality::kMay: return "M";
  }
  return "?";
}

std::string to_string(const ObjLiteral& l) {
  return (l.strong_neg ? "-" : "") + l.atom;
}

std::string to_string(const Literal& l) {
  if (auto* o = std::get_if<ObjLiteral>(&l)) return to_string(*o);
  if (auto* s = std::get_if<SubjLiteral>(&l)) return to_string(s->modality) + " " + to_string(s->inner);
  return std::get<Constant>(l).value ? "#true" : "#false";
}

std::string to_string(const ExtLiteral& l) {
  std::string out;
  for (int i = 0; i < l.naf_depth; ++i) out += "not ";
  return out + to_string(l.base);
}

std::string to_string(const Rule& r) {
  std::string out;
  for (std::size_t i = 0; i < r.head.size(); ++i) {
    if (i) out += " | ";
    out += to_string(r.head[i]);
  }
  if (r.head.empty()) {
    out += ":- ";
    if (r.body.empty()) out += "#true";
  } else if (!r.body.empty()) {
    out += " :- ";
  }
  for (std::size_t i = 0; i < r.body.size(); ++i) {
    if (i) out += ", ";
    out += to_string(r.body[i]);
  }
  return out + ".";
}

std::string to_string(const Program& p) {
  std::string out;
  for (const Rule& r : p.rules) out += to_string(r) + "\n";
  return out;
}

}  // namespace easp
