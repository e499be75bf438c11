#include <benchmark/benchmark.h>

#include "natfull/oracle.hpp"

using namespace natfull;

namespace {

Mat random_matrix(Rng& rng, const PrimeField& f, std::size_t r, std::size_t c) {
  Mat m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.below(f.modulus());
  return m;
}

void BM_rref(benchmark::State& state) {
  PrimeField f(5);
  Rng rng(1);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Mat m = random_matrix(rng, f, n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rref(m));
  }
}
BENCHMARK(BM_rref)->Arg(16)->Arg(64)->Arg(128)->Arg(256);

void BM_solve_affine(benchmark::State& state) {
  PrimeField f(5);
  Rng rng(2);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Mat a = random_matrix(rng, f, n, n);
  Vec b(n);
  for (auto& x : b) x = rng.below(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_affine(a, b));
  }
}
BENCHMARK(BM_solve_affine)->Arg(16)->Arg(64)->Arg(128);

void BM_tensor_square(benchmark::State& state) {
  FDAlgebra tri = build_triangular_example(3).first;
  Module reg = bimodule_regular(tri);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tensor_over(reg, reg));
  }
}
BENCHMARK(BM_tensor_square);

void BM_hom_space(benchmark::State& state) {
  FDAlgebra tri = build_triangular_example(3).first;
  Module reg = left_regular(tri);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hom_space(reg, reg, Sided::Left));
  }
}
BENCHMARK(BM_hom_space);

void BM_analyze_scalars(benchmark::State& state) {
  auto [r, phi] = build_triangular_example(static_cast<std::uint32_t>(state.range(0)));
  ScalarsFamily fam = default_scalars_family(phi);
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze_scalars(phi, fam));
  }
}
BENCHMARK(BM_analyze_scalars)->Arg(2)->Arg(5)->Arg(97);

void BM_analyze_coring(benchmark::State& state) {
  Coring c = sweedler_coring(build_triangular_example(3).second);
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze_cotensor_functor(c));
    benchmark::DoNotOptimize(analyze_forgetful_functor(c));
  }
}
BENCHMARK(BM_analyze_coring);

void BM_cormor_reduction(benchmark::State& state) {
  CoringMorphism cm = trivial_morphism_pair(build_triangular_example(2).second);
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze_F_naturally_full(cm));
    benchmark::DoNotOptimize(analyze_G_naturally_full(cm));
  }
}
BENCHMARK(BM_cormor_reduction);

void BM_suite_instance(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(equivalence_suite(1, 1, 2, 3));
  }
}
BENCHMARK(BM_suite_instance)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
