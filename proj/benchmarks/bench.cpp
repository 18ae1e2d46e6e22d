#include <benchmark/benchmark.h>

#include "dbcell/crosscheck.hpp"
#include "dbcell/dtransform.hpp"
#include "dbcell/tropical.hpp"

using namespace dbcell;

namespace {

PairWord word_of(const char* label, std::vector<int> letters) {
  return validate_pair_word(letters, CartanMatrix::from_label(label));
}

void BM_Amalgamate(benchmark::State& state) {
  PairWord w = word_of("G2", {-1, -2, -1, -2, -1, -2, 1, 2, 1, 2, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(amalgamate(w).first.size());
}
BENCHMARK(BM_Amalgamate);

void BM_MutationLoop(benchmark::State& state) {
  Seed s = amalgamate_seed({-1, -2, -1, 1, 2, 1}, CartanMatrix::from_label("A2"));
  for (auto _ : state) {
    Seed t = s.mutate({1, 1}).mutate({1, 2}).mutate({1, 1}).mutate({1, 2});
    benchmark::DoNotOptimize(t.size());
  }
}
BENCHMARK(BM_MutationLoop);

void BM_PolyGcd(benchmark::State& state) {
  RationalFunction x = RationalFunction::variable("x");
  RationalFunction y = RationalFunction::variable("y");
  RationalFunction one(Rat(1));
  Poly a = ((x + y).pow(4) * (one + x * y).pow(3)).num();
  Poly b = ((x - y).pow(2) * (one + x * y).pow(4)).num();
  for (auto _ : state) benchmark::DoNotOptimize(poly_gcd(a, b));
}
BENCHMARK(BM_PolyGcd);

void BM_BuildDtA2(benchmark::State& state) {
  PairWord w = word_of("A2", {-1, -2, -1, 1, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(build_dt(w).steps().size());
}
BENCHMARK(BM_BuildDtA2);

void BM_DtDegreeMatrixA2(benchmark::State& state) {
  PairWord w = word_of("A2", {-1, -2, -1, 1, 2, 1});
  ClusterTransformation dt = build_dt(w);
  for (auto _ : state) benchmark::DoNotOptimize(dt_degree_matrix(dt));
}
BENCHMARK(BM_DtDegreeMatrixA2);

void BM_DtDegreeMatrixB2(benchmark::State& state) {
  PairWord w = word_of("B2", {-1, -2, -1, -2, 1, 2, 1, 2});
  ClusterTransformation dt = build_dt(w);
  for (auto _ : state) benchmark::DoNotOptimize(dt_degree_matrix(dt));
}
BENCHMARK(BM_DtDegreeMatrixB2);

void BM_TropicalEval(benchmark::State& state) {
  PairWord w = word_of("B2", {-1, -2, -1, -2, 1, 2, 1, 2});
  TropicalMap map = tropicalize_transformation(build_dt(w));
  std::vector<Int> point(map.source_vars.size(), Int(1));
  for (auto _ : state) benchmark::DoNotOptimize(map.eval(point));
}
BENCHMARK(BM_TropicalEval);

void BM_TwistSL3(benchmark::State& state) {
  PairWord w = word_of("A2", {-1, -2, -1, 1, 2, 1});
  MatQ x = random_cell_element(w, 1);
  for (auto _ : state) benchmark::DoNotOptimize(twist(x, w.u_word(), w.v_word()));
}
BENCHMARK(BM_TwistSL3);

}  // namespace

BENCHMARK_MAIN();
