#include <random>

#include "benchmark/benchmark.h"
#include "latfan/enumerate.hpp"
#include "latfan/families.hpp"
#include "latfan/isomorphism.hpp"
#include "latfan/predicates.hpp"

using namespace latfan;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long long> entry(-6, 6);
  std::vector<IntVector> rows(n, IntVector(n));
  for (auto& row : rows) {
    for (auto& x : row) x = Int(entry(rng));
  }
  return IntMatrix(std::move(rows));
}

void BM_Det(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1234);
  std::vector<IntMatrix> inputs;
  for (int i = 0; i < 64; ++i) inputs.push_back(random_matrix(rng, n));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(det(inputs[i++ % inputs.size()]));
  }
}
BENCHMARK(BM_Det)->Arg(4)->Arg(6)->Arg(9);

void BM_FacetEnumeration(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::vector<IntVector> pts = family_vertices(FamilyId::P3, d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wrap_facets(d, pts));
  }
}
BENCHMARK(BM_FacetEnumeration)->Arg(3)->Arg(5)->Arg(7);

void BM_PolytopeBuild(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::vector<IntVector> pts = family_vertices(FamilyId::P2, d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Polytope::make(d, pts));
  }
}
BENCHMARK(BM_PolytopeBuild)->Arg(3)->Arg(5);

void BM_LatticePoints(benchmark::State& state) {
  Polytope p = make_family(FamilyId::P1, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(p.lattice_points());
  }
}
BENCHMARK(BM_LatticePoints)->Arg(4)->Arg(6);

void BM_LemmaSuite(benchmark::State& state) {
  Polytope p = make_family(FamilyId::P3, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_lemma_suite(p));
  }
}
BENCHMARK(BM_LemmaSuite)->Arg(3)->Arg(5);

void BM_Isomorphism(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Polytope a = make_family(FamilyId::P2, d);
  std::mt19937_64 rng(99);
  // A shear keeps entries small while scrambling the basis.
  std::vector<IntVector> rows = IntMatrix::identity(d).rows();
  rows[0][d - 1] = Int(1);
  rows[1][0] = Int(-1);
  std::vector<IntVector> mapped;
  IntMatrix t(rows);
  for (const auto& v : a.vertices()) {
    IntVector w(d, Int(0));
    for (int j = 0; j < d; ++j) {
      Int s = 0;
      for (int i = 0; i < d; ++i) s += v[i] * t.at(i, j);
      w[j] = s;
    }
    mapped.push_back(std::move(w));
  }
  Polytope b = Polytope::make(d, mapped);
  for (auto _ : state) {
    benchmark::DoNotOptimize(are_isomorphic(a, b));
  }
}
BENCHMARK(BM_Isomorphism)->Arg(3)->Arg(5);

void BM_Enumerate(benchmark::State& state) {
  SearchConfig cfg;
  cfg.dim = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_3dm1(cfg));
  }
}
BENCHMARK(BM_Enumerate)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
