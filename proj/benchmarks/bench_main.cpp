#include <benchmark/benchmark.h>

#include "qsg/sampling.hpp"
#include "qsg/verify.hpp"

using namespace qsg;

namespace {

const Semigroup& zplus() {
  static Semigroup s = Semigroup::lattice(1);
  return s;
}

std::vector<Element> sample_elements(const Semigroup& s, int n) {
  Sampler smp(1);
  std::vector<Element> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(smp.element(s, 5, 6, 4));
  return out;
}

}  // namespace

static void BM_ElementMul(benchmark::State& state) {
  const Semigroup& s = zplus();
  auto elems = sample_elements(s, 64);
  size_t i = 0;
  for (auto _ : state) {
    const Element& x = elems[i % elems.size()];
    const Element& y = elems[(i + 7) % elems.size()];
    benchmark::DoNotOptimize(mul(s, x, y));
    ++i;
  }
}
BENCHMARK(BM_ElementMul);

static void BM_ActWord(benchmark::State& state) {
  const Semigroup& s = zplus();
  Sampler smp(2);
  std::vector<Word> words;
  for (int i = 0; i < 64; ++i) words.push_back(smp.word(s, 6, 4));
  const GIdeal full = full_ideal(s);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(act(s, words[i % words.size()], full));
    ++i;
  }
}
BENCHMARK(BM_ActWord);

static void BM_BruteForceOracle(benchmark::State& state) {
  const Semigroup& s = zplus();
  Window win(s, state.range(0));
  Sampler smp(3);
  std::vector<Word> words;
  for (int i = 0; i < 32; ++i) words.push_back(smp.word(s, 6, 4));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        brute_force_ideal(s, words[i % words.size()], win));
    ++i;
  }
}
BENCHMARK(BM_BruteForceOracle)->Arg(20)->Arg(64);

static void BM_TruncatedNorm(benchmark::State& state) {
  const Semigroup& s = zplus();
  Window win(s, state.range(0));
  Sampler smp(4);
  Element x;
  for (long g = -2; g <= 1; ++g)
    x = add(x, scale(smp.nonzero_coeff(),
                     from_word(s, word_of_group_elem(s, s.elem(g)))));
  SparseCd m = float_matrix_of_element(s, x, win);
  for (auto _ : state) benchmark::DoNotOptimize(operator_norm(m));
}
BENCHMARK(BM_TruncatedNorm)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_BuildWd(benchmark::State& state) {
  const Semigroup& s = zplus();
  Window win(s, state.range(0));
  const GroupElem d = s.elem(3);
  for (auto _ : state) benchmark::DoNotOptimize(build_wd(s, d, win));
}
BENCHMARK(BM_BuildWd)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
