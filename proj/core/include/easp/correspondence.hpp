// Executable checks linking the reduct-based and the equilibrium-based
// readings: per-instance lemma checks, exhaustive runners over a seeded random
// corpus, and the global t-minimality / equilibrium-model correspondence.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "easp/classical.hpp"
#include "easp/eht.hpp"
#include "easp/minimality.hpp"
#include "easp/syntax.hpp"

namespace easp {

// {{{ Random programs

struct CorpusParams {
  std::size_t atoms = 3;  // pool a, b, c, ...
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  int max_rules = 4;
  int max_head = 2;
  int max_body = 3;
  double naf_probability = 0.4;
};

// One program per call: 1..max_rules rules, head width 0..max_head, body
// width 0..max_body, literals 1/2 objective, 1/4 K, 1/4 Khat, body literals
// under `not` with naf_probability.
Program random_program(std::mt19937_64& rng, const CorpusParams& params);
std::vector<Program> random_corpus(const CorpusParams& params);

// All nonempty collections of at most `max_size` distinct valuations.
std::vector<Collection> small_collections(std::size_t atoms, std::size_t max_size);

// }}}

// {{{ Lemma instances

// The lemmas presuppose that c is a model of p at the point: the here level
// of an implication also carries the total-model clause. `premise` records
// classical satisfaction of p by c at the point, and the checked identity is
// rhs == (lhs && premise), which is lhs == rhs whenever the premise holds.
struct LemmaInstance {
  bool lhs = false;
  bool rhs = false;
  bool premise = false;
  // lhs again, on the duplicate-free set of images.
  bool lhs_collapsed = false;

  bool holds() const { return rhs == (lhs && premise) && lhs == lhs_collapsed; }
};

LemmaInstance check_lemma1_instance(const Program& p, const Collection& c, const WeakeningF& w,
                                    std::size_t j);
LemmaInstance check_lemma2_instance(const Program& p, const Collection& c, const WeakeningR& r,
                                    const eht::HTPair& pair);

struct LemmaCounterexample {
  std::size_t program_index = 0;
  std::string program;
  std::string collection;
  std::string weakening;
  std::string pair;
  LemmaInstance values;
};

struct LemmaReport {
  int lemma = 1;
  CorpusParams params;
  std::size_t programs = 0;
  std::uint64_t collections = 0;
  std::uint64_t weakenings = 0;
  std::uint64_t instances = 0;
  std::uint64_t premise_instances = 0;
  // First failure per program, by program index.
  std::vector<LemmaCounterexample> counterexamples;
};

// Every program of the corpus against every collection of at most
// `max_collection` points over its signature, every subset function (lemma 1)
// or serial multi-valued subset function (lemma 2), and every point or pair.
LemmaReport run_lemma(int lemma, const CorpusParams& params, std::size_t max_collection = 3,
                      unsigned jobs = 1);

// }}}

// {{{ Correspondence

struct CorrespondenceReport {
  TVariant variant = TVariant::kFunctional;
  Signature signature;
  std::vector<Collection> t_minimal;
  std::vector<Collection> equilibrium;

  bool equal() const { return t_minimal == equilibrium; }
};

// Global t-minimal models of p next to the equilibrium models of its
// translation, both in canonical candidate order.
CorrespondenceReport check_correspondence(const Program& p, TVariant variant,
                                          std::size_t cap = 3);

struct CorrespondenceMismatch {
  std::size_t program_index = 0;
  std::string program;
  CorrespondenceReport report;
};

struct CorrespondenceCorpusReport {
  CorpusParams params;
  std::size_t programs = 0;
  std::vector<CorrespondenceMismatch> mismatches;
};

CorrespondenceCorpusReport run_correspondence(TVariant variant, const CorpusParams& params,
                                              unsigned jobs = 1);

// }}}

// {{{ Per-point versus global minimality

struct Divergence {
  std::size_t program_index = 0;
  std::string program;
  TVariant variant = TVariant::kFunctional;
  Signature signature;
  std::vector<Collection> perpoint_only;
  std::vector<Collection> global_only;
};

struct DivergenceReport {
  CorpusParams params;
  std::size_t programs = 0;
  std::vector<Divergence> divergences;
};

// Programs whose per-point and global t-minimal model sets differ, per
// variant. Every reported collection is re-checked by both checkers.
DivergenceReport search_divergence(const CorpusParams& params, unsigned jobs = 1);

// }}}

}  // namespace easp
