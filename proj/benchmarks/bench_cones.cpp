#include "extrop/cones.hpp"

#include <benchmark/benchmark.h>

using namespace extrop;

namespace {

// Simplicial cone of index n in rank 3.
Cone wide_cone(int n) { return Cone::from_generators(3, {IntVec{1, 0, 0}, IntVec{0, 1, 0}, IntVec{1, 1, n}}); }

void BM_HilbertBasis(benchmark::State& state) {
  for (auto _ : state) {
    const Cone c = dual_cone(wide_cone(static_cast<int>(state.range(0))));
    benchmark::DoNotOptimize(c.hilbert_basis().size());
  }
}
BENCHMARK(BM_HilbertBasis)->Arg(3)->Arg(10)->Arg(30);

void BM_FaceLattice(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const Cone c = Cone::orthant(n);
    benchmark::DoNotOptimize(c.face_lattice().faces.size());
  }
}
BENCHMARK(BM_FaceLattice)->DenseRange(2, 6, 2);

void BM_Biduality(benchmark::State& state) {
  const Cone c = Cone::from_generators(4, {IntVec{1, 0, 0, 0}, IntVec{0, 1, 0, 0}, IntVec{0, 0, 1, 0},
                                           IntVec{1, 1, -1, 2}, IntVec{0, 1, 1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(dual_cone(dual_cone(c)) == c);
}
BENCHMARK(BM_Biduality);

}  // namespace
