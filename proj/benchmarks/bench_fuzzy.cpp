#include <benchmark/benchmark.h>

#include "fll/fuzzy_set.hpp"
#include "fll/sampling.hpp"
#include "fll/topology.hpp"

using namespace fll;

namespace {

FiniteFuzzySet random_set(DetRng& rng, const std::vector<Label>& universe) {
  std::map<Label, UnitValue> mu;
  for (const auto& s : universe) mu.emplace(s, UnitValue(Rational(rng.uniform_int(0, 10), 10)));
  return FiniteFuzzySet(std::move(mu));
}

std::vector<Label> make_universe(long n) {
  std::vector<Label> u;
  for (long i = 0; i < n; ++i) u.push_back("e" + std::to_string(i));
  return u;
}

}  // namespace

static void BM_FuzzyUnion(benchmark::State& state) {
  DetRng rng(7);
  const auto universe = make_universe(state.range(0));
  const auto a = random_set(rng, universe);
  const auto b = random_set(rng, universe);
  for (auto _ : state) benchmark::DoNotOptimize(fuzzy_union(a, b));
}
BENCHMARK(BM_FuzzyUnion)->Arg(8)->Arg(64)->Arg(512);

static void BM_TopologyAxioms(benchmark::State& state) {
  const auto universe = make_universe(3);
  const FiniteFuzzySet gamma = FiniteFuzzySet::whole(universe);
  std::vector<FiniteFuzzySet> family;
  const unsigned q = static_cast<unsigned>(state.range(0));
  for (unsigned k = 0; k <= q; ++k)
    family.push_back(constant_intersection(UnitValue(Rational(k, q)), gamma));
  const FuzzyTopSpace space(gamma, std::move(family), q);
  for (auto _ : state) benchmark::DoNotOptimize(is_fuzzy_topology(space));
}
BENCHMARK(BM_TopologyAxioms)->Arg(10)->Arg(20)->Arg(40);

static void BM_MinProduct(benchmark::State& state) {
  DetRng rng(8);
  const auto universe = make_universe(state.range(0));
  const auto a = random_set(rng, universe);
  const auto b = random_set(rng, universe);
  for (auto _ : state) benchmark::DoNotOptimize(min_product<Label>({a, b}));
}
BENCHMARK(BM_MinProduct)->Arg(8)->Arg(32);
