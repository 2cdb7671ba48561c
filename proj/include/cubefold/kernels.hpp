#pragma once

// Data-parallel kernels. Each has an OpenMP version and a serial reference
// with identical results; tests and the benchmark compare the two.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cubefold/graph.hpp"

namespace cubefold::kernels {

DistanceMatrix all_pairs_bfs(const Graph& g);
DistanceMatrix all_pairs_bfs_serial(const Graph& g);

struct TripleScan {
  std::uint64_t bad = 0;  // triples without exactly one median
  std::optional<std::array<Vertex, 3>> first_bad;
  friend bool operator==(const TripleScan&, const TripleScan&) = default;
};

TripleScan median_triples(const Graph& g);
TripleScan median_triples_serial(const Graph& g);

/// side[w][v] is 1 when v lies on the plus side of wall w.
using SideTable = std::vector<std::vector<char>>;

/// occupancy[i * W + j] has bit (2a + b) set when some vertex sits on side a
/// of wall i and side b of wall j.
std::vector<std::uint8_t> pair_occupancy(const SideTable& side);
std::vector<std::uint8_t> pair_occupancy_serial(const SideTable& side);

/// Every bitmask over W <= 24 walls (bit w set = plus side of wall w) whose
/// chosen sides meet pairwise, skipping pairs with exempt[i * W + j] set.
/// Sorted ascending.
std::vector<std::uint32_t> consistent_masks(std::size_t walls,
                                            const std::vector<std::uint8_t>& occupancy,
                                            const std::vector<char>& exempt);
std::vector<std::uint32_t> consistent_masks_serial(std::size_t walls,
                                                   const std::vector<std::uint8_t>& occupancy,
                                                   const std::vector<char>& exempt);

}  // namespace cubefold::kernels
