#include <benchmark/benchmark.h>

#include <random>

#include "liouville/classical.hpp"
#include "liouville/lattice.hpp"
#include "liouville/ring.hpp"

using namespace liouville;

namespace {

ArithFunc random_digits(std::size_t bound, Domain domain, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> digit(-9, 9);
  ArithFunc::IntegerValues v(bound + 1);
  for (std::size_t n = 1; n <= bound; ++n) v[n] = digit(rng);
  v[1] = 1;
  return ArithFunc::from_storage(std::move(v)).in(domain);
}

void BM_ConvolveZ(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ArithFunc a = random_digits(n, Domain::Integer, 1);
  const ArithFunc b = random_digits(n, Domain::Integer, 2);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConvolveZ)->RangeMultiplier(10)->Range(1000, 1'000'000)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNLogN);

void BM_ConvolveQ(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ArithFunc a = random_digits(n, Domain::Rational, 1);
  const ArithFunc b = random_digits(n, Domain::Rational, 2);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(a, b));
}
BENCHMARK(BM_ConvolveQ)->RangeMultiplier(10)->Range(1000, 100'000)->Unit(benchmark::kMillisecond);

void BM_InverseZ(benchmark::State& state) {
  const ArithFunc a = random_digits(static_cast<std::size_t>(state.range(0)), Domain::Integer, 3);
  for (auto _ : state) benchmark::DoNotOptimize(inverse(a));
}
BENCHMARK(BM_InverseZ)->RangeMultiplier(10)->Range(1000, 10'000)->Unit(benchmark::kMillisecond);

void BM_InverseQ(benchmark::State& state) {
  const ArithFunc a = classical::build("sigma_1", static_cast<std::size_t>(state.range(0))).in(Domain::Rational);
  for (auto _ : state) benchmark::DoNotOptimize(inverse(a));
}
BENCHMARK(BM_InverseQ)->RangeMultiplier(10)->Range(1000, 100'000)->Unit(benchmark::kMillisecond);

void BM_SieveBuild(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classical::build("phi", n));
}
BENCHMARK(BM_SieveBuild)->RangeMultiplier(10)->Range(10'000, 1'000'000)->Unit(benchmark::kMillisecond);

void BM_ChainCover(benchmark::State& state) {
  const lattice::DivisorPoset poset = lattice::co_ideal(static_cast<lattice::Divisor>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lattice::chain_cover(poset));
  state.counters["elements"] = static_cast<double>(poset.size());
}
BENCHMARK(BM_ChainCover)->Arg(210)->Arg(720720)->Arg(735134400)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
