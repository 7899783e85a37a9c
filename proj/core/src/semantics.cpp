#include "easp/semantics.hpp"

#include <stdexcept>

namespace easp {

namespace {

[[noreturn]] void bad(std::string_view what, std::string_view value) {
  throw std::invalid_argument("unknown " + std::string(what) + " '" + std::string(value) + "'");
}

}  // namespace

SemanticsConfig preset(std::string_view name) {
  SemanticsConfig c;
  if (name == "es94") {
    c.reduct = ReductKind::kEs94;
    return c;
  }
  if (name == "kahl") {
    c.reduct = ReductKind::kKahl;
    return c;
  }
  if (name == "eem-f") return {ReductKind::kEasp, TVariant::kFunctional, TScope::kGlobal, KMin::kNone};
  if (name == "faeel") return {ReductKind::kEasp, TVariant::kRelational, TScope::kGlobal, KMin::kKD};
  if (name == "raeel") return {ReductKind::kEasp, TVariant::kFunctional, TScope::kGlobal, KMin::kSW5};

  // easp-<f|r>[-global][-<kd|sw5>]
  std::string_view rest = name;
  if (rest.substr(0, 5) != "easp-") bad("preset", name);
  rest.remove_prefix(5);
  c = SemanticsConfig{ReductKind::kEasp, TVariant::kFunctional, TScope::kPerPoint, KMin::kNone};
  if (rest.substr(0, 1) == "f") {
    c.t_variant = TVariant::kFunctional;
  } else if (rest.substr(0, 1) == "r") {
    c.t_variant = TVariant::kRelational;
  } else {
    bad("preset", name);
  }
  rest.remove_prefix(1);
  if (rest.substr(0, 7) == "-global") {
    c.t_scope = TScope::kGlobal;
    rest.remove_prefix(7);
  }
  if (rest == "-kd") {
    c.kmin = KMin::kKD;
  } else if (rest == "-sw5") {
    c.kmin = KMin::kSW5;
  } else if (!rest.empty()) {
    bad("preset", name);
  }
  return c;
}

std::string to_string(ReductKind r) {
  switch (r) {
    case ReductKind::kEs94: return "es94";
    case ReductKind::kKahl: return "kahl";
    case ReductKind::kEasp: return "easp";
  }
  return "?";
}

std::string to_string(TVariant v) { return v == TVariant::kFunctional ? "functional" : "relational"; }
std::string to_string(TScope s) { return s == TScope::kPerPoint ? "per-point" : "global"; }

std::string to_string(KMin k) {
  switch (k) {
    case KMin::kNone: return "none";
    case KMin::kKD: return "kd";
    case KMin::kSW5: return "sw5";
  }
  return "?";
}

std::string to_string(Refutation r) {
  return r == Refutation::kExistential ? "existential" : "universal";
}

std::string to_string(const SemanticsConfig& c) {
  if (c.reduct != ReductKind::kEasp) return to_string(c.reduct);
  std::string out = "easp/" + to_string(c.t_variant) + "/" + to_string(c.t_scope) + "/" +
                    to_string(c.kmin);
  if (c.refutation == Refutation::kUniversal) out += "/universal";
  return out;
}

ReductKind parse_reduct(std::string_view s) {
  if (s == "es94") return ReductKind::kEs94;
  if (s == "kahl") return ReductKind::kKahl;
  if (s == "easp") return ReductKind::kEasp;
  bad("reduct", s);
}

TVariant parse_t_variant(std::string_view s) {
  if (s == "functional" || s == "f") return TVariant::kFunctional;
  if (s == "relational" || s == "r") return TVariant::kRelational;
  bad("t-minimality variant", s);
}

TScope parse_t_scope(std::string_view s) {
  if (s == "per-point" || s == "perpoint") return TScope::kPerPoint;
  if (s == "global") return TScope::kGlobal;
  bad("t-minimality scope", s);
}

KMin parse_kmin(std::string_view s) {
  if (s == "none") return KMin::kNone;
  if (s == "kd") return KMin::kKD;
  if (s == "sw5") return KMin::kSW5;
  bad("k-minimality filter", s);
}

Refutation parse_refutation(std::string_view s) {
  if (s == "existential") return Refutation::kExistential;
  if (s == "universal") return Refutation::kUniversal;
  bad("refutation mode", s);
}

}  // namespace easp
