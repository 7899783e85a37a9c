// The semantics matrix: which reduct, which truth-minimality and which
// knowledge-minimality filter a solve uses.

#pragma once

#include <string>
#include <string_view>

#include "easp/minimality.hpp"

namespace easp {

enum class ReductKind { kEs94, kKahl, kEasp };
enum class KMin { kNone, kKD, kSW5 };

// es94 and kahl ignore the t_* and kmin fields: their world-views are the
// fixed points c = answer_sets(reduct(p, c)).
struct SemanticsConfig {
  ReductKind reduct = ReductKind::kEasp;
  TVariant t_variant = TVariant::kFunctional;
  TScope t_scope = TScope::kPerPoint;
  KMin kmin = KMin::kKD;
  Refutation refutation = Refutation::kExistential;

  bool operator==(const SemanticsConfig&) const = default;

  TMinOptions tmin() const { return {t_variant, t_scope, refutation}; }
};

// Named presets:
//   es94, kahl
//   eem-f   easp, functional, global, no k-filter
//   faeel   easp, relational, global, KD
//   raeel   easp, functional, global, SW5
// and the composable form easp-<f|r>[-global][-<kd|sw5>] (per-point and no
// k-filter unless given), e.g. easp-f-kd, easp-r-global-sw5.
// Throws std::invalid_argument on unknown names.
SemanticsConfig preset(std::string_view name);

std::string to_string(ReductKind r);
std::string to_string(TVariant v);
std::string to_string(TScope s);
std::string to_string(KMin k);
std::string to_string(Refutation r);
// Compact description, e.g. "easp/functional/per-point/kd".
std::string to_string(const SemanticsConfig& c);

ReductKind parse_reduct(std::string_view s);
TVariant parse_t_variant(std::string_view s);
TScope parse_t_scope(std::string_view s);
KMin parse_kmin(std::string_view s);
Refutation parse_refutation(std::string_view s);

}  // namespace easp
