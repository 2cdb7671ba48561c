#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cubefold/graph.hpp"

namespace cubefold {

struct MedianReport {
  bool is_median = true;
  std::optional<std::array<Vertex, 3>> witness;  // a triple with zero or several medians
  std::uint64_t bad_triples = 0;
  // u, v, then three common neighbours
  std::optional<std::array<Vertex, 5>> k23_found;
  // x; its neighbours a, b, c; then the square corners ab, ac, bc with no
  // common neighbour besides x
  std::optional<std::array<Vertex, 7>> cube_condition_violation;
};

std::optional<Vertex> median(const Graph& g, Vertex x, Vertex y, Vertex z);

/// Exhaustive triple check plus diagnostics. Memoized per graph.
MedianReport is_median(const Graph& g);

/// Throws NotMedian naming `what`.
void require_median(const Graph& g, const std::string& what);

std::string describe(const Graph& g, const MedianReport& report);

/// Closure under the median of triples. Throws NotMedian.
VertexSet median_hull(const Graph& g, VertexSet s);
/// Closure under intervals. Throws NotMedian.
VertexSet convex_hull(const Graph& g, VertexSet s);
/// Throws NotMedian, DisconnectedSubset.
bool is_convex(const Graph& g, const VertexSet& s);

/// Set induced connected in g.
bool is_connected_subset(const Graph& g, const VertexSet& s);

struct SubmedianCertificate {
  bool parity_well_defined = false;
  bool parity_injective = false;
  std::optional<std::pair<Vertex, Vertex>> parity_collision;
  bool squares_span_cycles = false;
  std::size_t cycle_rank = 0;   // m - n + 1
  std::size_t square_rank = 0;  // GF(2) rank of the 4-cycles
  std::size_t classes = 0;

  bool consistent() const { return parity_injective && squares_span_cycles; }
};

SubmedianCertificate submedian_certificate(const Graph& g);

/// Parity of crossings of each class along any path from the basepoint.
/// Empty when some cycle crosses a class an odd number of times.
std::optional<std::vector<std::vector<char>>> parity_vectors(const Graph& g);

}  // namespace cubefold
