// Knowledge/belief minimality (KD and its reflexive closure SW5) and the full
// world-view pipeline.

#pragma once

#include <cstdint>
#include <vector>

#include "easp/semantics.hpp"

namespace easp {

// A collection extended by a valuation it does not contain. Modalities at the
// extra point range over the base only (KD access), or over the base and the
// extra point itself when reflexive.
struct ExtensionCandidate {
  Collection base;
  Valuation extra;

  ExtensionCandidate(Collection b, Valuation i);
};

// Modal view seen from the extra point when its objective part is `at`.
ModalView extension_view(const Collection& base, Valuation at, bool reflexive);

// easp_reduct of p at the extra point: objective naf literals judged in the
// extra valuation, subjective ones under the KD (or SW5) view.
EncodedProgram extension_reduct(const EncodedProgram& p, const ExtensionCandidate& ec,
                                bool reflexive);

// p (positive) holds at the extra point.
bool kd_sat_at_extra(const ExtensionCandidate& ec, const EncodedProgram& p, bool reflexive);

// p (positive) holds at the here-and-there pair (h, extra): once with the
// objective part in h and once in extra, modalities over the base (plus h
// resp. extra when reflexive). Throws if h is not a strict subset of extra.
bool kd_sat_at_weak_extra(const ExtensionCandidate& ec, Valuation h, const EncodedProgram& p,
                          bool reflexive);

// No valuation I over the signature outside c yields a preferred extension,
// i.e. one that satisfies the reduct at I while no strict subset of I does.
bool is_belief_stable(const EncodedProgram& p, const Collection& c, std::size_t atoms,
                      bool reflexive);

struct SolveResult {
  std::vector<Collection> world_views;
  std::uint64_t candidates_checked = 0;
};

// EASP family: t-minimal collections, then the chosen k-filter.
// ES94/Kahl: collections equal to the answer sets of their reduct.
SolveResult world_views(const EncodedProgram& p, std::size_t atoms, const SemanticsConfig& cfg,
                        std::size_t cap = kDefaultSignatureCap, unsigned jobs = 1);

struct ProgramWorldViews {
  Signature signature;
  SolveResult result;
};

// Strong negation is eliminated first; collections are over the signature of
// the rewritten program.
ProgramWorldViews world_views(const Program& p, const SemanticsConfig& cfg,
                              std::size_t cap = kDefaultSignatureCap, unsigned jobs = 1);

}  // namespace easp
