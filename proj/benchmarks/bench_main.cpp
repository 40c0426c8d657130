#include <benchmark/benchmark.h>

#include <vector>

#include "adic/morse.hpp"
#include "adic/morse_arith.hpp"
#include "adic/random.hpp"
#include "adic/solenoid.hpp"
#include "adic/substitution.hpp"

using namespace adic;

namespace {

std::vector<EpSeq> sample(std::size_t n, EpSeqShape shape) {
  Rng rng(1);
  std::vector<EpSeq> out;
  while (out.size() < n) {
    EpSeq x = random_non_max_ep_seq(rng, shape);
    out.push_back(std::move(x));
  }
  return out;
}

void BM_MorseSuccessor(benchmark::State& state) {
  const auto points = sample(256, {static_cast<std::size_t>(state.range(0)), 6});
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(morse_successor(points[i++ % points.size()]));
}
BENCHMARK(BM_MorseSuccessor)->Arg(8)->Arg(64)->Arg(512);

void BM_Add(benchmark::State& state) {
  const auto points = sample(256, {16, static_cast<std::size_t>(state.range(0))});
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(add(points[i % points.size()], points[(i + 1) % points.size()]));
    ++i;
  }
}
BENCHMARK(BM_Add)->Arg(4)->Arg(16)->Arg(64);

void BM_FromRational(benchmark::State& state) {
  const BigInt q = state.range(0);
  BigInt p = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(from_rational(p, q));
    p += 2;
  }
}
BENCHMARK(BM_FromRational)->Arg(7)->Arg(1023)->Arg(65537);

void BM_CodingOfZero(benchmark::State& state) {
  const EpSeq zero = EpSeq::constant(0);
  for (auto _ : state) benchmark::DoNotOptimize(coding(zero, 0, state.range(0) - 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CodingOfZero)->Arg(1 << 8)->Arg(1 << 12);

void BM_MorseInt(benchmark::State& state) {
  BigInt n = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(morse_int(n));
    ++n;
  }
}
BENCHMARK(BM_MorseInt);

void BM_MorseHat(benchmark::State& state) {
  Rng rng(2);
  std::vector<BiSeq> points;
  for (int i = 0; i < 256; ++i) points.push_back(random_bi_seq(rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(m_hat(points[i++ % points.size()], Extension::on));
}
BENCHMARK(BM_MorseHat);

}  // namespace
BENCHMARK_MAIN();
