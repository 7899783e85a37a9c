// Whole-pipeline properties on random corpora, checked against the
// brute-force oracle.

#include <gtest/gtest.h>

#include "easp/asp.hpp"
#include "easp/correspondence.hpp"
#include "easp/kmin.hpp"
#include "helpers.hpp"

using namespace easp;

namespace {

std::vector<Program> corpus(std::size_t atoms, std::size_t samples, std::uint64_t seed) {
  CorpusParams params;
  params.atoms = atoms;
  params.samples = samples;
  params.seed = seed;
  return random_corpus(params);
}

bool oracle_world_view(const Program& p, const oracle::Worlds& w, const SemanticsConfig& cfg,
                       const std::vector<std::string>& atoms) {
  if (cfg.reduct == ReductKind::kEs94) return oracle::es94_world_view(p, w, atoms);
  bool t = false;
  if (cfg.t_scope == TScope::kPerPoint)
    t = cfg.t_variant == TVariant::kFunctional
            ? oracle::tmin_perpoint_f(p, w)
            : oracle::tmin_perpoint_r(p, w, cfg.refutation == Refutation::kUniversal);
  else
    t = cfg.t_variant == TVariant::kFunctional ? oracle::tmin_global_f(p, w) : oracle::tmin_global_r(p, w);
  if (!t || cfg.kmin == KMin::kNone) return t;
  return oracle::belief_stable(p, w, atoms, cfg.kmin == KMin::kSW5);
}

}  // namespace

TEST(Pipeline, AgreesWithOracleUnderEveryConfiguration) {
  std::vector<SemanticsConfig> configs = {preset("es94")};
  for (TVariant v : {TVariant::kFunctional, TVariant::kRelational})
    for (TScope s : {TScope::kPerPoint, TScope::kGlobal})
      for (KMin k : {KMin::kNone, KMin::kKD, KMin::kSW5})
        configs.push_back({ReductKind::kEasp, v, s, k, Refutation::kExistential});
  configs.push_back({ReductKind::kEasp, TVariant::kRelational, TScope::kPerPoint, KMin::kNone,
                     Refutation::kUniversal});

  for (const Program& p : corpus(2, 80, 61)) {
    const Signature sig = p.signature();
    const EncodedProgram e = encode(p, sig);
    for (const SemanticsConfig& cfg : configs) {
      std::vector<Collection> expected;
      for (const Collection& c : enumerate_candidates(sig.size()))
        if (oracle_world_view(p, testing_support::worlds_of(c, sig), cfg, sig.atoms()))
          expected.push_back(c);
      EXPECT_EQ(world_views(e, sig.size(), cfg).world_views, expected)
          << to_string(cfg) << "\n" << to_string(p);
    }
  }
}

TEST(Pipeline, RelationalImpliesFunctionalOnWorldViews) {
  std::size_t strict = 0;
  for (const Program& p : corpus(3, 100, 62)) {
    const Signature sig = p.signature();
    const EncodedProgram e = encode(p, sig);
    for (TScope s : {TScope::kPerPoint, TScope::kGlobal}) {
      auto r = t_minimal_models(e, sig.size(), {TVariant::kRelational, s, Refutation::kExistential});
      auto f = t_minimal_models(e, sig.size(), {TVariant::kFunctional, s, Refutation::kExistential});
      for (const Collection& c : r.models)
        EXPECT_NE(std::find(f.models.begin(), f.models.end(), c), f.models.end()) << to_string(p);
      strict += f.models.size() > r.models.size();
    }
  }
  EXPECT_GT(strict, 0u);
}

TEST(Pipeline, ModalityFreeProgramsDegenerate) {
  std::size_t checked = 0;
  for (const Program& p : corpus(3, 300, 63)) {
    const Signature sig = p.signature();
    const EncodedProgram e = encode(p, sig);
    if (!e.is_modality_free()) continue;
    ++checked;
    const auto as = answer_sets(e, sig.size());
    std::vector<Collection> expected;
    if (!as.empty()) expected.push_back(Collection(as).canonical());
    for (const char* name :
         {"easp-f-kd", "easp-r-global-kd", "easp-f-sw5", "faeel", "raeel", "es94", "kahl"})
      EXPECT_EQ(world_views(e, sig.size(), preset(name)).world_views, expected)
          << name << "\n" << to_string(p);
    // Without a k-filter every nonempty set of answer sets survives.
    std::size_t subsets = 0;
    for (const Collection& c : enumerate_candidates(sig.size()))
      subsets += std::all_of(c.points().begin(), c.points().end(), [&](Valuation v) {
        return std::find(as.begin(), as.end(), v) != as.end();
      });
    for (const char* name : {"easp-f", "easp-r-global", "eem-f"}) {
      auto got = world_views(e, sig.size(), preset(name)).world_views;
      EXPECT_EQ(got.size(), subsets) << name << "\n" << to_string(p);
      for (const Collection& c : got)
        for (Valuation v : c.points()) EXPECT_NE(std::find(as.begin(), as.end(), v), as.end());
    }
  }
  EXPECT_GT(checked, 20u);
}

TEST(Pipeline, StrongNegationIsConsistent) {
  for (const char* text : {"-q | q.", "p | -q :- not K p.", "-a :- not a.\na :- K -a."}) {
    ProgramWorldViews r = world_views(parse_program(text), preset("easp-f-kd"));
    for (const Collection& c : r.result.world_views)
      for (Valuation v : c.points())
        for (std::size_t i = 0; i < r.signature.size(); ++i) {
          const std::string& name = r.signature.name(i);
          if (name.rfind("neg_", 0) != 0) continue;
          const std::string base = name.substr(4);
          for (std::size_t j = 0; j < r.signature.size(); ++j)
            if (r.signature.name(j) == base) EXPECT_FALSE(v.contains(i) && v.contains(j)) << text;
        }
  }
}
