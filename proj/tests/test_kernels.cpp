#include <doctest.h>

#include "cubefold/cubulation.hpp"
#include "cubefold/kernels.hpp"
#include "support.hpp"

using namespace cubefold;

TEST_CASE("parallel kernels match their serial references") {
  std::mt19937 rng(3);
  auto graphs = fixtures::median_corpus();
  graphs.push_back(fixtures::k23());
  graphs.push_back(fixtures::corner());
  graphs.push_back(fixtures::cycle(6));
  for (int i = 0; i < 10; ++i) graphs.push_back(fixtures::random_median(6, 6, 30, rng));

  for (const auto& g : graphs) {
    CAPTURE(g.name());
    auto a = kernels::all_pairs_bfs(g), b = kernels::all_pairs_bfs_serial(g);
    CHECK(a.d == b.d);
    CHECK(kernels::median_triples(g) == kernels::median_triples_serial(g));

    if (!hyperplanes(g).all_halfspaces()) continue;
    auto w = walls_from_hyperplanes(g);
    auto occ = kernels::pair_occupancy(w.side);
    CHECK(occ == kernels::pair_occupancy_serial(w.side));
    if (w.walls.size() > 16) continue;
    std::vector<char> none(w.walls.size() * w.walls.size(), 0);
    CHECK(kernels::consistent_masks(w.walls.size(), occ, none) ==
          kernels::consistent_masks_serial(w.walls.size(), occ, none));
  }
}

TEST_CASE("median triple scan counts bad triples") {
  CHECK(kernels::median_triples(fixtures::hypercube(3)).bad == 0);
  auto k = kernels::median_triples(fixtures::k23());
  CHECK(k.bad > 0);
  CHECK(k.first_bad.has_value());
  CHECK(kernels::median_triples(fixtures::cycle(6)).bad > 0);
}
