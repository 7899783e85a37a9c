#include <gtest/gtest.h>

#include "easp/correspondence.hpp"
#include "easp/kmin.hpp"
#include "easp/reducts.hpp"
#include "helpers.hpp"

using namespace easp;
using testing_support::as_set;
using testing_support::AtomLists;
using testing_support::coll;
using testing_support::fixture;
using testing_support::val;

namespace {

std::set<AtomLists> solve(const std::string& fixture_name, const std::string& preset_name) {
  ProgramWorldViews r = world_views(fixture(fixture_name), preset(preset_name));
  return as_set(r.result.world_views, r.signature);
}

const std::vector<std::string> kEaspPresets = {
    "easp-f",        "easp-r",        "easp-f-global",    "easp-r-global",
    "easp-f-kd",     "easp-r-kd",     "easp-f-global-kd", "easp-r-global-kd",
    "easp-f-sw5",    "easp-r-sw5",    "easp-f-global-sw5", "easp-r-global-sw5"};

}  // namespace

TEST(Extension, RejectsAPointOfTheBase) {
  Signature sig({"a"});
  EXPECT_THROW(ExtensionCandidate(coll(sig, {{"a"}}), val(sig, {"a"})), std::invalid_argument);
}

TEST(Extension, KdAccessIgnoresTheExtraPoint) {
  Program p = parse_program("a :- K a.");
  Signature sig = p.signature();
  EncodedProgram e = encode(p, sig);
  ExtensionCandidate ec(coll(sig, {{"a"}}), val(sig, {}));
  EXPECT_FALSE(kd_sat_at_extra(ec, e, false));
  EXPECT_TRUE(kd_sat_at_extra(ec, e, true));
}

TEST(Extension, PossibilityOverTheBase) {
  Program p = parse_program(":- Khat b.");
  Signature sig = p.signature();
  EncodedProgram e = encode(p, sig);
  ExtensionCandidate ec(coll(sig, {{}}), val(sig, {"b"}));
  EXPECT_TRUE(kd_sat_at_extra(ec, e, false));
  EXPECT_FALSE(kd_sat_at_extra(ec, e, true));
}

TEST(Extension, WeakPairs) {
  Program p = parse_program("a | b :- K c.\nc.");
  Signature sig = p.signature();
  EncodedProgram e = encode(p, sig);
  ExtensionCandidate ec(coll(sig, {{"a", "c"}}), val(sig, {"b", "c"}));
  EXPECT_TRUE(kd_sat_at_extra(ec, e, false));
  EXPECT_FALSE(kd_sat_at_weak_extra(ec, val(sig, {"c"}), e, false));
  EXPECT_FALSE(kd_sat_at_weak_extra(ec, val(sig, {"b"}), e, false));
  EXPECT_THROW(kd_sat_at_weak_extra(ec, val(sig, {"b", "c"}), e, false), std::invalid_argument);
  EXPECT_THROW(kd_sat_at_weak_extra(ec, val(sig, {"a"}), e, false), std::invalid_argument);
}

TEST(BeliefStability, ModalFacts) {
  Program k = fixture("k_fact.lp");
  Signature sig = k.signature();
  EncodedProgram e = encode(k, sig);
  EXPECT_FALSE(is_belief_stable(e, coll(sig, {{"p"}}), 1, false));
  EXPECT_TRUE(is_belief_stable(e, coll(sig, {{"p"}}), 1, true));
  Program kh = fixture("khat_fact.lp");
  EncodedProgram eh = encode(kh, sig);
  EXPECT_TRUE(is_belief_stable(eh, coll(sig, {{}, {"p"}}), 1, false));
  EXPECT_TRUE(is_belief_stable(eh, coll(sig, {{}, {"p"}}), 1, true));
}

TEST(WorldViews, KLoop) {
  EXPECT_EQ(solve("k_loop.lp", "es94"), (std::set<AtomLists>{{{}}, {{"a"}}}));
  for (const auto& name : kEaspPresets) EXPECT_EQ(solve("k_loop.lp", name), (std::set<AtomLists>{{{}}})) << name;
}

TEST(WorldViews, KhatLoopAndMay) {
  for (const auto& name : kEaspPresets)
    EXPECT_EQ(solve("khat_loop.lp", name), (std::set<AtomLists>{{{}}})) << name;
  EXPECT_THROW(solve("m_loop.lp", "easp-f"), UnsupportedModality);
  EXPECT_THROW(solve("m_loop.lp", "faeel"), UnsupportedModality);
  EXPECT_EQ(solve("m_loop.lp", "es94"), (std::set<AtomLists>{{{}}, {{"a"}}}));
}

TEST(WorldViews, GuardedDisjunction) {
  EXPECT_EQ(solve("guarded_disjunction.lp", "easp-f"),
            (std::set<AtomLists>{{{"a"}, {"b", "c"}}, {{"b", "c"}}}));
  EXPECT_EQ(solve("guarded_disjunction.lp", "easp-r"), solve("guarded_disjunction.lp", "easp-f"));
  EXPECT_EQ(solve("guarded_disjunction.lp", "easp-f-kd"), (std::set<AtomLists>{{{"a"}, {"b", "c"}}}));
}

TEST(WorldViews, BeliefGuards) {
  EXPECT_EQ(solve("belief_guards.lp", "easp-f"),
            (std::set<AtomLists>{{{"a", "c"}, {"b", "d"}}, {{"a", "c"}}}));
}

TEST(WorldViews, ModalFactPresets) {
  EXPECT_EQ(solve("k_fact.lp", "faeel"), (std::set<AtomLists>{}));
  EXPECT_EQ(solve("k_fact.lp", "raeel"), (std::set<AtomLists>{{{"p"}}}));
  EXPECT_EQ(solve("khat_fact.lp", "raeel"), (std::set<AtomLists>{{{}, {"p"}}}));
}

TEST(WorldViews, ModalityFreeProgramsHaveTheirAnswerSets) {
  EXPECT_EQ(solve("choice.lp", "easp-f-kd"), (std::set<AtomLists>{{{"a"}, {"b"}}}));
  EXPECT_EQ(solve("odd_loop.lp", "easp-f-kd"), (std::set<AtomLists>{}));
}

TEST(WorldViews, Kahl) {
  EXPECT_EQ(solve("k_loop.lp", "kahl"), (std::set<AtomLists>{{{}}}));
  EXPECT_EQ(solve("choice.lp", "kahl"), (std::set<AtomLists>{{{"a"}, {"b"}}}));
}

namespace {

std::vector<Program> corpus(std::size_t atoms, std::size_t samples, std::uint64_t seed) {
  CorpusParams params;
  params.atoms = atoms;
  params.samples = samples;
  params.seed = seed;
  return random_corpus(params);
}

}  // namespace

TEST(Oracle, BeliefStability) {
  for (const Program& p : corpus(2, 150, 31)) {
    const Signature sig = p.signature();
    const EncodedProgram e = encode(p, sig);
    for (const Collection& c : small_collections(sig.size(), 4))
      for (bool reflexive : {false, true})
        EXPECT_EQ(is_belief_stable(e, c, sig.size(), reflexive),
                  oracle::belief_stable(p, testing_support::worlds_of(c, sig), sig.atoms(), reflexive))
            << to_string(p) << to_string(c, sig) << reflexive;
  }
}

TEST(Oracle, Es94WorldViewsBothWays) {
  for (const Program& p : corpus(3, 60, 32)) {
    const Signature sig = p.signature();
    const SolveResult r = world_views(encode(p, sig), sig.size(), preset("es94"));
    std::set<Collection> found(r.world_views.begin(), r.world_views.end());
    for (const Collection& c : enumerate_candidates(sig.size()))
      EXPECT_EQ(found.count(c) == 1,
                oracle::es94_world_view(p, testing_support::worlds_of(c, sig), sig.atoms()))
          << to_string(p) << to_string(c, sig);
  }
}

TEST(Properties, WorldViewsAreClassicalModels) {
  for (const Program& p : corpus(3, 60, 33)) {
    const Signature sig = p.signature();
    const EncodedProgram e = encode(p, sig);
    for (const char* name : {"es94", "easp-f-kd", "faeel", "raeel", "easp-r-sw5"})
      for (const Collection& c : world_views(e, sig.size(), preset(name)).world_views)
        EXPECT_TRUE(is_classical_s5_model(c, p, sig)) << name << " " << to_string(p);
  }
}

TEST(Properties, KFiltersOnlyRemove) {
  for (const Program& p : corpus(3, 60, 34)) {
    const Signature sig = p.signature();
    const EncodedProgram e = encode(p, sig);
    for (const char* base : {"easp-f", "easp-r-global"}) {
      auto all = world_views(e, sig.size(), preset(base)).world_views;
      std::set<Collection> unfiltered(all.begin(), all.end());
      for (const char* suffix : {"-kd", "-sw5"})
        for (const Collection& c :
             world_views(e, sig.size(), preset(std::string(base) + suffix)).world_views)
          EXPECT_TRUE(unfiltered.count(c));
    }
  }
}

// An atom outside the program never appears and changes nothing.
TEST(Properties, UnusedAtomChangesNothing) {
  for (const Program& p : corpus(2, 60, 35)) {
    const Signature sig = p.signature();
    const EncodedProgram e = encode(p, sig);
    for (const char* name : {"es94", "kahl", "easp-f-kd", "easp-r-global-sw5", "eem-f"})
      EXPECT_EQ(world_views(e, sig.size(), preset(name)).world_views,
                world_views(e, sig.size() + 1, preset(name)).world_views)
          << name << " " << to_string(p);
  }
}
