#include <benchmark/benchmark.h>

#include "psisum/group.hpp"
#include "psisum/psi_formulas.hpp"
#include "psisum/theorems.hpp"

using namespace psisum;

static void BM_PsiCyclicClosedForm(benchmark::State& state) {
  const auto top = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    for (std::uint64_t n = 1; n <= top; ++n) benchmark::DoNotOptimize(psi_cyclic(n));
}
BENCHMARK(BM_PsiCyclicClosedForm)->Arg(5000);

static void BM_PsiCyclicOracle(benchmark::State& state) {
  const auto top = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    for (std::uint64_t n = 1; n <= top; ++n) benchmark::DoNotOptimize(psi_cyclic_oracle(n));
}
BENCHMARK(BM_PsiCyclicOracle)->Arg(5000);

static void BM_BuildAndSum(benchmark::State& state, const char* text) {
  const GroupSpec spec = parse_group_spec(text);
  for (auto _ : state) benchmark::DoNotOptimize(psi(build_group(spec)));
}
BENCHMARK_CAPTURE(BM_BuildAndSum, C2xC2xC99, "A[2,2]xC99");
BENCHMARK_CAPTURE(BM_BuildAndSum, M3125, "M(5,5)");
BENCHMARK_CAPTURE(BM_BuildAndSum, SD_13_12_2, "SD(13,12,2)");

static void BM_SemidirectSuites(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(semidirect_bound_check(200));
    benchmark::DoNotOptimize(centralizer_bound_check(200));
  }
}
BENCHMARK(BM_SemidirectSuites)->Unit(benchmark::kMillisecond);

static void BM_InequalityAudit(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(proof_inequality_audit(97, 199, 6));
}
BENCHMARK(BM_InequalityAudit)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
