#pragma once

#include <string>
#include <vector>

#include "cubefold/graph.hpp"
#include "cubefold/kernels.hpp"
#include "cubefold/morphism.hpp"

namespace cubefold {

struct Wall {
  std::int32_t id = 0;
  VertexSet plus;
  VertexSet minus;
};

struct Wallspace {
  Graph carrier;
  std::vector<Wall> walls;
  kernels::SideTable side;  // side[w][v] = 1 on the plus side
  std::vector<std::string> names;
};

/// Validates that every wall has two nonempty sides.
Wallspace make_wallspace(Graph carrier, kernels::SideTable side,
                         std::vector<std::string> names = {});

/// One wall per hyperplane. Throws HalfspacesUnavailable.
Wallspace walls_from_hyperplanes(const Graph& g);

/// Bit w is true when the plus side of wall w is chosen.
using Orientation = std::vector<bool>;

std::string orientation_bits(const Orientation& o);

/// Throws UnknownVertex.
Orientation principal_orientation(const Wallspace& w, Vertex x);

/// Square matrix over walls; a nonzero entry lifts the consistency
/// requirement for that pair. Empty means no exemptions.
using Exemptions = std::vector<char>;

bool is_consistent(const Wallspace& w, const Orientation& o, const Exemptions& exempt = {});

/// Breadth-first from the basepoint's principal orientation through
/// single-wall flips.
std::vector<Orientation> consistent_orientations(const Wallspace& w,
                                                 const Exemptions& exempt = {});

/// Filters all 2^W choices. Requires W <= 24.
std::vector<Orientation> consistent_orientations_brute(const Wallspace& w,
                                                       const Exemptions& exempt = {},
                                                       bool parallel = true);

struct Cubulation {
  Graph source;
  Graph graph;
  std::vector<Vertex> eta;                // source vertex -> graph vertex
  std::vector<Orientation> orientations;  // per graph vertex
  std::vector<std::int32_t> edge_wall;    // per graph edge
};

/// Vertices are consistent orientations, edges single-wall flips. Principal
/// orientations are named after their preimages; others `o:<bits>`.
Cubulation cubulate(const Wallspace& w, const Exemptions& exempt = {});

/// The canonical map source -> cubulation, when parallel-preserving.
PPMap eta_map(const Cubulation& c);

/// The unique xi with psi = xi o eta. Throws NotFactorizable.
PPMap universal_map_through_cubulation(const PPMap& psi, const Cubulation& c,
                                       bool reverse = false);

/// Extends a partial vertex map (-1 = unassigned) into a median codomain.
/// Forced square corners are filled first; when none applies, an unmapped
/// vertex is reached across an edge parallel to one already mapped. Throws
/// `on_fail` when a forced value is missing or two forced values disagree.
std::vector<Vertex> complete_map(const Graph& domain, const Graph& codomain,
                                 std::vector<Vertex> partial, ErrorKind on_fail,
                                 bool reverse = false);

/// Appends primes until `name` is not in `taken`.
std::string unique_name(std::string name, const std::vector<std::string>& taken_sorted);

}  // namespace cubefold
