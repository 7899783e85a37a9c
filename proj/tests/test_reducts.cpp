#include <gtest/gtest.h>

#include "easp/correspondence.hpp"
#include "easp/reducts.hpp"
#include "helpers.hpp"

using namespace easp;
using testing_support::coll;
using testing_support::fixture;

namespace {

std::string easp_at(const Program& p, const Collection& c, std::size_t i) {
  return to_string(simplify(easp_reduct(p, PointedCollection(c, i), p.signature())));
}

}  // namespace

TEST(EaspReduct, BeliefGuards) {
  Program g = fixture("belief_guards.lp");
  Signature sig = g.signature();
  Collection c = coll(sig, {{"a", "c"}, {"b", "d"}});
  EXPECT_EQ(easp_at(g, c, 0), "a | b.\nc :- Khat a.\nd :- b.\n");
  EXPECT_EQ(easp_at(g, c, 1), "a | b.\nd :- b.\n");
}

TEST(EaspReduct, NafFreeProgramIsUnchanged) {
  Program phi = fixture("mutual_k.lp");
  Signature sig = phi.signature();
  for (const Collection& c : small_collections(sig.size(), 4))
    for (std::size_t i = 0; i < c.size(); ++i)
      EXPECT_EQ(easp_reduct(phi, PointedCollection(c, i), sig), phi);
}

TEST(EaspReduct, KeepsPositiveSubjectiveLiterals) {
  Program p = parse_program("a :- K b, not K c, not d.");
  Signature sig = p.signature();
  Collection c = coll(sig, {{"b"}});
  EXPECT_EQ(to_string(easp_reduct(p, PointedCollection(c, 0), sig)), "a :- K b, #true, #true.\n");
}

TEST(EaspReduct, RejectsMay) {
  Program p = fixture("m_loop.lp");
  Signature sig = p.signature();
  EXPECT_THROW(easp_reduct(p, PointedCollection(coll(sig, {{}}), 0), sig), UnsupportedModality);
}

TEST(Es94Reduct, KLoop) {
  Program p = fixture("k_loop.lp");
  Signature sig = p.signature();
  EXPECT_EQ(to_string(es94_reduct(p, coll(sig, {{"a"}}), sig)), "a :- #true.\n");
  EXPECT_EQ(to_string(es94_reduct(p, coll(sig, {{}}), sig)), "a :- #false.\n");
}

TEST(Es94Reduct, MayIsEvaluatedOnTheCollection) {
  Program p = fixture("m_loop.lp");
  Signature sig = p.signature();
  EXPECT_EQ(to_string(es94_reduct(p, coll(sig, {{}, {"a"}}), sig)), "a :- #true.\n");
  EXPECT_EQ(to_string(es94_reduct(p, coll(sig, {{}}), sig)), "a :- #false.\n");
}

TEST(Es94Reduct, SubjectiveHeads) {
  Program p = parse_program("K a | b.");
  Signature sig = p.signature();
  EXPECT_EQ(to_string(es94_reduct(p, coll(sig, {{"a"}}), sig)), "");
  EXPECT_EQ(to_string(es94_reduct(p, coll(sig, {{}}), sig)), "b.\n");
}

TEST(KahlReduct, Table) {
  Signature sig({"a", "b"});
  auto kahl = [&](const std::string& text, const testing_support::AtomLists& c) {
    return to_string(kahl_reduct(parse_program(text), coll(sig, c), sig));
  };
  EXPECT_EQ(kahl("a :- K a.", {{"a"}}), "a :- a.\n");
  EXPECT_EQ(kahl("a :- K a.", {{}, {"a"}}), "a :- #false.\n");
  EXPECT_EQ(kahl("a :- M a.", {{}, {"a"}}), "a :- #true.\n");
  EXPECT_EQ(kahl("a :- M a.", {{}}), "a :- not not a.\n");
  EXPECT_EQ(kahl("b :- not K a.", {{"a"}}), "b :- not a.\n");
  EXPECT_EQ(kahl("b :- not K a.", {{}}), "b :- #true.\n");
  EXPECT_EQ(kahl("b :- not M a.", {{}}), "b :- not a.\n");
  EXPECT_EQ(kahl("b :- not M a.", {{"a"}}), "b :- #false.\n");
  EXPECT_EQ(kahl("a :- Khat a.", {{}}), "a :- not not a.\n");
}

TEST(Reducts, Invariants) {
  CorpusParams params;
  params.samples = 80;
  params.seed = 5;
  for (const Program& p : random_corpus(params)) {
    const Signature sig = p.signature();
    const EncodedProgram ep = encode(p, sig);
    for (const Collection& c : small_collections(sig.size(), 3)) {
      const auto w = testing_support::worlds_of(c, sig);
      const EncodedProgram e94 = es94_reduct(ep, c);
      const EncodedProgram kahl = kahl_reduct(ep, c);
      EXPECT_TRUE(e94.is_modality_free());
      EXPECT_TRUE(kahl.is_modality_free());
      // The oracle keeps subjective head literals as constants; compare models.
      const Program mine = decode(e94, sig), ref = oracle::es94_reduct(p, w);
      for (const auto& v : oracle::worlds(sig.atoms()))
        EXPECT_EQ(oracle::sat(mine, v, {v}), oracle::sat(ref, v, {v})) << to_string(p);
      EXPECT_EQ(oracle::answer_sets(mine, sig.atoms()), oracle::answer_sets(ref, sig.atoms()));
      for (std::size_t i = 0; i < c.size(); ++i) {
        const EncodedProgram r = easp_reduct(ep, PointedCollection(c, i));
        EXPECT_TRUE(r.is_positive());
        EXPECT_EQ(to_string(decode(r, sig)), to_string(oracle::easp_reduct(p, w[i], w))) << to_string(p);
        // The reduct and the program agree at the pointed collection.
        EXPECT_EQ(holds(r, c[i], ModalView::of(c)), holds(ep, c[i], ModalView::of(c)));
        // Idempotent.
        EXPECT_EQ(easp_reduct(r, PointedCollection(c, i)), r);
      }
    }
  }
}
