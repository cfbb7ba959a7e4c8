#include <benchmark/benchmark.h>

#include <memory>

#include "optree/combinat.hpp"
#include "optree/hopf.hpp"
#include "optree/operads.hpp"
#include "optree/special/fdb.hpp"
#include "optree/special/mould.hpp"

using namespace optree;

namespace {

void enumerate_terminal(benchmark::State& state) {
  const auto op = terminal_operad();
  const auto nodes = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_ptrees(op, nodes, 3));
  }
}
BENCHMARK(enumerate_terminal)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void enumerate_bd_identity(benchmark::State& state) {
  const auto op = bd_operad(identity_operad());
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_ptrees(op, 4, 4));
  }
}
BENCHMARK(enumerate_bd_identity)->Unit(benchmark::kMillisecond);

void delta_linear(benchmark::State& state, CoalgebraKind kind) {
  const auto op = identity_operad();
  const auto x = as_lincomb(Forest{linear_key(static_cast<std::size_t>(state.range(0)))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(delta(kind, op, x));
  }
}
BENCHMARK_CAPTURE(delta_linear, cuts, CoalgebraKind::cuts)->DenseRange(4, 12, 4);
BENCHMARK_CAPTURE(delta_linear, blobs, CoalgebraKind::blobs)->DenseRange(4, 12, 4);

void verify_terminal(benchmark::State& state, Axiom axiom) {
  const auto op = terminal_operad();
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify(axiom, op, {4, 3, std::nullopt}));
  }
}
BENCHMARK_CAPTURE(verify_terminal, coassoc_cuts, Axiom::coassoc_cuts)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(verify_terminal, coassoc_blobs, Axiom::coassoc_blobs)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(verify_terminal, comodule_bialgebra, Axiom::comodule_bialgebra)
    ->Unit(benchmark::kMillisecond);

void mould_operations(benchmark::State& state) {
  auto m = std::make_shared<const FiniteMonoid>(cyclic_monoid(3));
  std::mt19937_64 rng(7);
  const Mould a = Mould::random(m, 5, rng);
  const Mould b = Mould::random(m, 5, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mould_product(a, b));
    benchmark::DoNotOptimize(mould_compose(a, b));
  }
}
BENCHMARK(mould_operations)->Unit(benchmark::kMillisecond);

void mould_duality(benchmark::State& state) {
  auto m = std::make_shared<const FiniteMonoid>(cyclic_monoid(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mould_duality_check(m, 4, 5, 7));
  }
}
BENCHMARK(mould_duality)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
