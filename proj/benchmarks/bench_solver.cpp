#include <benchmark/benchmark.h>

#include "easp/correspondence.hpp"
#include "easp/eht.hpp"
#include "easp/kmin.hpp"

using namespace easp;

namespace {

Program load(const char* name) { return parse_program_file(std::string(EASP_FIXTURE_DIR) + "/" + name); }

void BM_EnumerateCandidates(benchmark::State& state) {
  const auto atoms = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    CandidateEnumerator e(atoms);
    Collection c{Valuation{}};
    std::size_t n = 0;
    while (e.next(&c)) ++n;
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_EnumerateCandidates)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

// Four atoms: the whole space of 65535 candidates.
void BM_SolveBeliefGuards(benchmark::State& state, const char* preset_name) {
  const Program p = load("belief_guards.lp");
  const Signature sig = p.signature();
  const EncodedProgram e = encode(p, sig);
  const SemanticsConfig cfg = preset(preset_name);
  for (auto _ : state) benchmark::DoNotOptimize(world_views(e, sig.size(), cfg));
}
BENCHMARK_CAPTURE(BM_SolveBeliefGuards, easp_f_kd, "easp-f-kd")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SolveBeliefGuards, easp_r_kd, "easp-r-kd")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SolveBeliefGuards, faeel, "faeel")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SolveBeliefGuards, es94, "es94")->Unit(benchmark::kMillisecond);

void BM_Equilibrium(benchmark::State& state, TVariant variant) {
  const Program p = load("guarded_disjunction.lp");
  const Signature sig = p.signature();
  const eht::CompiledFormula f(eht::translate_to_eht(p), sig);
  for (auto _ : state) benchmark::DoNotOptimize(eht::eems(f, sig.size(), variant));
}
BENCHMARK_CAPTURE(BM_Equilibrium, functional, TVariant::kFunctional)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Equilibrium, relational, TVariant::kRelational)->Unit(benchmark::kMillisecond);

void BM_Lemma(benchmark::State& state) {
  CorpusParams params;
  params.samples = 20;
  const int lemma = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_lemma(lemma, params, 3));
}
BENCHMARK(BM_Lemma)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
