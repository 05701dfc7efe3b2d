#include <benchmark/benchmark.h>

#include "fll/enveloping.hpp"
#include "fll/sampling.hpp"

using namespace fll;

namespace {

std::vector<Word> random_words(std::size_t count, unsigned length) {
  DetRng rng(1234);
  std::vector<Word> words(count, Word(length));
  for (auto& w : words)
    for (auto& i : w) i = static_cast<unsigned>(rng.uniform_int(0, 2));
  return words;
}

}  // namespace

static void BM_NormalForm(benchmark::State& state) {
  const auto& algebra = LieAlgebraSpec::sl2();
  const auto words = random_words(64, static_cast<unsigned>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        EnvElement::normal_form(algebra, words[i % words.size()], Rational(1)));
    ++i;
  }
}
BENCHMARK(BM_NormalForm)->DenseRange(2, 6);

static void BM_EnvMul(benchmark::State& state) {
  const auto& algebra = LieAlgebraSpec::so3_cross();
  DetRng rng(99);
  EnvElement a(algebra), b(algebra);
  for (int t = 0; t < 4; ++t) {
    Word w(static_cast<std::size_t>(state.range(0)));
    for (auto& i : w) i = static_cast<unsigned>(rng.uniform_int(0, 2));
    std::sort(w.begin(), w.end());
    a.add_term(w, Rational(rng.uniform_int(1, 5)));
    std::reverse(w.begin(), w.end());
    std::sort(w.begin(), w.end());
    b.add_term(w, Rational(rng.uniform_int(1, 5)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_EnvMul)->DenseRange(1, 4);

static void BM_Symmetrize(benchmark::State& state) {
  const auto& algebra = LieAlgebraSpec::heisenberg();
  Exponents e(3, 0);
  unsigned left = static_cast<unsigned>(state.range(0));
  for (unsigned i = 0; left > 0; i = (i + 1) % 3, --left) e[i] += 1;
  const SymPoly p = SymPoly::monomial(algebra, e, Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(symmetrize(p));
}
BENCHMARK(BM_Symmetrize)->DenseRange(2, 6);

static void BM_ExpAdOperator(benchmark::State& state) {
  const auto& algebra = LieAlgebraSpec::so3_cross();
  const RatVec x = {Rational(1, 4), Rational(-1, 3), Rational(1, 2)};
  EnvElement d(algebra);
  d.add_term({0, 1, 2}, Rational(1));
  d.add_term({1, 1}, Rational(-2));
  const unsigned trunc = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exp_ad_operator(x, d, trunc));
}
BENCHMARK(BM_ExpAdOperator)->Arg(5)->Arg(10)->Arg(20);
