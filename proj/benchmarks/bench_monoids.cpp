#include "extrop/extended.hpp"

#include <benchmark/benchmark.h>

using namespace extrop;

namespace {

void BM_PushoutReesPair(benchmark::State& state) {
  const PointedMonoid p = PointedMonoid::free(static_cast<std::size_t>(state.range(0)));
  const auto& faces = p.cone().face_lattice().faces;
  const ReesQuotient a = rees_quotient(p, faces[1]), b = rees_quotient(p, faces[faces.size() / 2]);
  for (auto _ : state) benchmark::DoNotOptimize(pushout(a.map, b.map).object.rank());
}
BENCHMARK(BM_PushoutReesPair)->Arg(2)->Arg(3)->Arg(4);

void BM_DualizeCompose(benchmark::State& state) {
  const PointedMonoid n2 = PointedMonoid::free(2), n1 = PointedMonoid::free(1);
  const PointedMorphism sum = PointedMorphism::toric(n2, n1, LatticeMap(2, 1, IntMatrix::from_rows(2, {IntVec{1, 1}})));
  const PointedMorphism diag = PointedMorphism::toric(n1, n2, LatticeMap(1, 2, IntMatrix::from_rows(1, {IntVec{1}, IntVec{1}})));
  for (auto _ : state) benchmark::DoNotOptimize(compose_ext(dualize(sum), dualize(diag)).is_toric());
}
BENCHMARK(BM_DualizeCompose);

}  // namespace
