#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "psisum/canonical.hpp"
#include "psisum/enumerate.hpp"
#include "psisum/group.hpp"

using namespace psisum;

static void BM_AllGroups(benchmark::State& state) {
  EnumerationOptions options;
  options.bound = kEnumerationHardCap;
  options.threads = 1;
  options.warn = [](const std::string&) {};
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(all_groups(n, options));
}
BENCHMARK(BM_AllGroups)->Arg(6)->Arg(8)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_CanonicalForm(benchmark::State& state, const char* text) {
  const Group g = build_group(parse_group_spec(text));
  std::vector<Element> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(3);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  const CayleyTable shuffled = relabel(CayleyTable::from_group(g), perm);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(shuffled));
}
BENCHMARK_CAPTURE(BM_CanonicalForm, Q8, "Q8")->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_CanonicalForm, D12, "D12")->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_CanonicalForm, M16, "M(2,4)")->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_CanonicalForm, C2x4, "A[2,2,2,2]")->Unit(benchmark::kMicrosecond);

static void BM_IsCanonical(benchmark::State& state) {
  const auto tables = all_groups(12);
  for (auto _ : state)
    for (const auto& t : tables) benchmark::DoNotOptimize(is_canonical(t));
}
BENCHMARK(BM_IsCanonical)->Unit(benchmark::kMicrosecond);
