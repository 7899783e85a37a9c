#include "easp/kmin.hpp"

#include "easp/asp.hpp"
#include "easp/parallel.hpp"
#include "easp/reducts.hpp"

namespace easp {

ExtensionCandidate::ExtensionCandidate(Collection b, Valuation i)
    : base(std::move(b)), extra(i) {
  if (base.contains(extra))
    throw std::invalid_argument("the extra valuation must not belong to the base collection");
}

ModalView extension_view(const Collection& base, Valuation at, bool reflexive) {
  ModalView v = ModalView::of(base);
  if (reflexive) {
    v.known &= at.bits;
    v.possible |= at.bits;
  }
  return v;
}

EncodedProgram extension_reduct(const EncodedProgram& p, const ExtensionCandidate& ec,
                                bool reflexive) {
  return easp_reduct(p, ec.extra, extension_view(ec.base, ec.extra, reflexive));
}

bool kd_sat_at_extra(const ExtensionCandidate& ec, const EncodedProgram& p, bool reflexive) {
  return holds(p, ec.extra, extension_view(ec.base, ec.extra, reflexive));
}

bool kd_sat_at_weak_extra(const ExtensionCandidate& ec, Valuation h, const EncodedProgram& p,
                          bool reflexive) {
  if (!h.strict_subset_of(ec.extra))
    throw std::invalid_argument("the weakened valuation must be a strict subset of the extra one");
  return holds(p, h, extension_view(ec.base, h, reflexive)) &&
         holds(p, ec.extra, extension_view(ec.base, ec.extra, reflexive));
}

bool is_belief_stable(const EncodedProgram& p, const Collection& c_in, std::size_t atoms,
                      bool reflexive) {
  const Collection c = c_in.canonical();
  const std::uint32_t limit = std::uint32_t{1} << atoms;
  for (std::uint32_t i = 0; i < limit; ++i) {
    const Valuation extra{i};
    if (c.contains(extra)) continue;
    const ExtensionCandidate ec(c, extra);
    const EncodedProgram r = extension_reduct(p, ec, reflexive);
    if (!kd_sat_at_extra(ec, r, reflexive)) continue;
    bool weaker_model = false;
    for (std::uint32_t h = (i - 1) & i; h != i; h = (h - 1) & i) {
      if (kd_sat_at_weak_extra(ec, Valuation{h}, r, reflexive)) {
        weaker_model = true;
        break;
      }
      if (h == 0) break;
    }
    if (!weaker_model) return false;  // preferred extension found
  }
  return true;
}

namespace {

SolveResult fixed_point_world_views(const EncodedProgram& p, std::size_t atoms,
                                    ReductKind kind, std::size_t cap, unsigned jobs) {
  std::vector<Collection> candidates = enumerate_candidates(atoms, cap);
  std::vector<char> keep(candidates.size(), 0);
  parallel_for(candidates.size(), jobs, [&](std::size_t i) {
    const Collection& c = candidates[i];
    const EncodedProgram red = kind == ReductKind::kEs94 ? es94_reduct(p, c) : kahl_reduct(p, c);
    keep[i] = answer_sets(red, atoms) == c.points();
  });
  SolveResult out;
  out.candidates_checked = candidates.size();
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (keep[i]) out.world_views.push_back(std::move(candidates[i]));
  return out;
}

}  // namespace

SolveResult world_views(const EncodedProgram& p, std::size_t atoms, const SemanticsConfig& cfg,
                        std::size_t cap, unsigned jobs) {
  if (cfg.reduct != ReductKind::kEasp)
    return fixed_point_world_views(p, atoms, cfg.reduct, cap, jobs);

  TMinResult tmin = t_minimal_models(p, atoms, cfg.tmin(), cap, jobs);
  SolveResult out;
  out.candidates_checked = tmin.candidates_checked;
  if (cfg.kmin == KMin::kNone) {
    out.world_views = std::move(tmin.models);
    return out;
  }
  const bool reflexive = cfg.kmin == KMin::kSW5;
  std::vector<char> keep(tmin.models.size(), 0);
  parallel_for(tmin.models.size(), jobs, [&](std::size_t i) {
    keep[i] = is_belief_stable(p, tmin.models[i], atoms, reflexive);
  });
  for (std::size_t i = 0; i < tmin.models.size(); ++i)
    if (keep[i]) out.world_views.push_back(std::move(tmin.models[i]));
  return out;
}

ProgramWorldViews world_views(const Program& p, const SemanticsConfig& cfg, std::size_t cap,
                              unsigned jobs) {
  if (cfg.reduct == ReductKind::kEasp) require_no_may(p);
  Program plain = eliminate_strong_negation(p);
  ProgramWorldViews out;
  out.signature = plain.signature();
  check_signature_cap(out.signature.size(), cap);
  out.result = world_views(encode(plain, out.signature), out.signature.size(), cfg, cap, jobs);
  return out;
}

}  // namespace easp
