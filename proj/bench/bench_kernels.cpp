// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <map>

#include "cubefold/cubulation.hpp"
#include "cubefold/fixtures.hpp"
#include "cubefold/kernels.hpp"

using namespace cubefold;

namespace {

// grid(n, n): n*n vertices, 2(n-1) hyperplanes
const Graph& grid_of(int n) {
  static std::map<int, Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, fixtures::grid(n, n)).first;
  return it->second;
}

const Graph& cube_of(int d) {
  static std::map<int, Graph> cache;
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, fixtures::hypercube(d)).first;
  return it->second;
}

template <auto Kernel>
void bfs(benchmark::State& state) {
  const Graph& g = grid_of(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(g));
  state.counters["vertices"] = double(g.order());
}

template <auto Kernel>
void triples(benchmark::State& state) {
  const Graph& g = grid_of(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(g));
  state.counters["vertices"] = double(g.order());
}

template <auto Kernel>
void occupancy(benchmark::State& state) {
  const Graph& g = cube_of(int(state.range(0)));
  auto w = walls_from_hyperplanes(g);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(w.side));
  state.counters["walls"] = double(w.walls.size());
}

template <auto Kernel>
void masks(benchmark::State& state) {
  // a path has as many walls as edges and only n+1 consistent masks
  const Graph g = fixtures::path(int(state.range(0)));
  auto w = walls_from_hyperplanes(g);
  auto occ = kernels::pair_occupancy(w.side);
  std::vector<char> none(w.walls.size() * w.walls.size(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(w.walls.size(), occ, none));
  state.counters["walls"] = double(w.walls.size());
}

}  // namespace

BENCHMARK(bfs<kernels::all_pairs_bfs>)->Name("all_pairs_bfs/parallel")->Arg(16)->Arg(32)->Arg(48);
BENCHMARK(bfs<kernels::all_pairs_bfs_serial>)->Name("all_pairs_bfs/serial")->Arg(16)->Arg(32)->Arg(48);
BENCHMARK(triples<kernels::median_triples>)->Name("median_triples/parallel")->Arg(5)->Arg(7)->Arg(9);
BENCHMARK(triples<kernels::median_triples_serial>)->Name("median_triples/serial")->Arg(5)->Arg(7)->Arg(9);
BENCHMARK(occupancy<kernels::pair_occupancy>)->Name("pair_occupancy/parallel")->Arg(8)->Arg(10)->Arg(12);
BENCHMARK(occupancy<kernels::pair_occupancy_serial>)->Name("pair_occupancy/serial")->Arg(8)->Arg(10)->Arg(12);
BENCHMARK(masks<kernels::consistent_masks>)->Name("consistent_masks/parallel")->Arg(14)->Arg(18)->Arg(20);
BENCHMARK(masks<kernels::consistent_masks_serial>)->Name("consistent_masks/serial")->Arg(14)->Arg(18)->Arg(20);

BENCHMARK_MAIN();
