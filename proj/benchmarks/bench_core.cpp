#include <benchmark/benchmark.h>

#include "radix/formula.hpp"
#include "radix/obstruction.hpp"
#include "radix/permchar.hpp"
#include "radix/tower.hpp"

namespace radix {
namespace {

void BM_SymmetrizeVandermondeSquare(benchmark::State& state) {
  const MPoly d = vandermonde(static_cast<std::size_t>(state.range(0))).pow(2);
  for (auto _ : state) benchmark::DoNotOptimize(symmetrize(d));
}
BENCHMARK(BM_SymmetrizeVandermondeSquare)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ExpandElementary(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const MPoly p = symmetrize(vandermonde(n).pow(2));
  for (auto _ : state) benchmark::DoNotOptimize(expand_elementary(p));
}
BENCHMARK(BM_ExpandElementary)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_TowerInverseCubic(benchmark::State& state) {
  Tower base(TowerSpec{3, {}, {}, {}});
  const Tower t = base.extended(3, base.from_base(RatFunc(symmetrize(vandermonde(3).pow(2)))), Attestation::Verified);
  const TowerElem u = t.add(t.add(t.lift(t.sigma(1), 1), t.generator(1)), t.mul(t.generator(1), t.generator(1)));
  for (auto _ : state) benchmark::DoNotOptimize(t.inverse(u));
}
BENCHMARK(BM_TowerInverseCubic)->Unit(benchmark::kMillisecond);

void BM_VerifyBuiltin(benchmark::State& state) {
  const auto f = builtin(state.range(0) == 2 ? Builtin::Degree2 : Builtin::Degree3);
  for (auto _ : state) benchmark::DoNotOptimize(verify_poly_formula(f).valid());
}
BENCHMARK(BM_VerifyBuiltin)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_CommutatorClosure(benchmark::State& state) {
  const auto gens = an_generators(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(commutator_closure(gens).size());
}
BENCHMARK(BM_CommutatorClosure)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_HomTrivialA5(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_hom_trivial(5, static_cast<std::uint32_t>(state.range(0))));
}
BENCHMARK(BM_HomTrivialA5)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace radix

BENCHMARK_MAIN();
