#include <benchmark/benchmark.h>

#include "bei/corner.hpp"
#include "bei/groebner.hpp"
#include "bei/koszul.hpp"
#include "bei/lcm_lattice.hpp"
#include "bei/paths.hpp"

namespace {

void BM_admissible_paths_cycle8(benchmark::State& state) {
  const bei::Graph g = bei::make_cycle(8);
  for (auto _ : state) benchmark::DoNotOptimize(bei::enumerate_admissible_paths(g));
}
BENCHMARK(BM_admissible_paths_cycle8);

void BM_groebner_basis_k44(benchmark::State& state) {
  const bei::Graph g = bei::make_complete_bipartite(4, 4);
  for (auto _ : state) benchmark::DoNotOptimize(bei::groebner_basis(g));
}
BENCHMARK(BM_groebner_basis_k44);

void BM_verify_groebner_cycle6(benchmark::State& state) {
  const bei::Graph g = bei::make_cycle(6);
  for (auto _ : state) benchmark::DoNotOptimize(bei::verify_groebner(g));
}
BENCHMARK(BM_verify_groebner_cycle6);

void BM_lcm_lattice_betti_cycle5(benchmark::State& state) {
  const bei::MonomialIdeal I = bei::initial_ideal(bei::make_cycle(5));
  for (auto _ : state) benchmark::DoNotOptimize(bei::lcm_lattice_betti(I));
}
BENCHMARK(BM_lcm_lattice_betti_cycle5);

void BM_koszul_spot_cycle4(benchmark::State& state) {
  const bei::KoszulInput in = bei::koszul_input_from_graph(bei::make_cycle(4));
  for (auto _ : state) benchmark::DoNotOptimize(bei::koszul_spot(in, 3, 5));
}
BENCHMARK(BM_koszul_spot_cycle4);

void BM_cycle_corner_betti_n10(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bei::cycle_corner_betti(10));
}
BENCHMARK(BM_cycle_corner_betti_n10);

}  // namespace

BENCHMARK_MAIN();
