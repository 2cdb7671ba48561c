#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubefold/graph.hpp"
#include "cubefold/hyperplane.hpp"

namespace cubefold {

/// Parallel-preserving map. Only `validate` constructs one, so every PPMap
/// sends edges to edges and parallel edges to parallel edges.
class PPMap {
 public:
  const Graph& domain() const { return domain_; }
  const Graph& codomain() const { return codomain_; }
  const std::vector<Vertex>& vertex_map() const { return vmap_; }
  const std::vector<HyperplaneId>& hyperplane_map() const { return hmap_; }

  Vertex operator()(Vertex v) const { return vmap_.at(v); }
  HyperplaneId hyperplane(HyperplaneId j) const { return hmap_.at(j); }

  /// Sorted image of the vertex set.
  VertexSet image() const;

 private:
  friend PPMap validate(const Graph&, const Graph&, std::vector<Vertex>);
  Graph domain_;
  Graph codomain_;
  std::vector<Vertex> vmap_;
  std::vector<HyperplaneId> hmap_;
};

struct MapReport {
  bool ok = true;
  ErrorKind error = ErrorKind::InternalError;
  std::string message;
  // for ParallelBroken: two codomain classes receiving one domain class
  std::optional<HyperplanePair> split_classes;
  // a domain 4-cycle whose image is neither a 4-cycle nor a single edge
  std::optional<FourCycle> bad_square;
};

MapReport check_map(const Graph& domain, const Graph& codomain, const std::vector<Vertex>& vmap);

/// Throws EdgeCollapsed, NotAnEdge, ParallelBroken, UnknownVertex.
PPMap validate(const Graph& domain, const Graph& codomain, std::vector<Vertex> vmap);

/// Builds the vertex map from identifier pairs; every domain vertex must be
/// listed exactly once.
PPMap map_from_ids(const Graph& domain, const Graph& codomain,
                   const std::vector<std::pair<std::string, std::string>>& pairs);

PPMap identity_map(const Graph& g);

enum class MapKind {
  NotParallelPreserving,
  ParallelPreserving,
  IsometricEmbedding,
  ConvexEmbedding,
  Isometry,
};

std::string_view map_kind_name(MapKind kind);

struct MapClass {
  MapKind kind = MapKind::Isometry;
  std::optional<HyperplanePair> witness;  // domain hyperplanes, or codomain ones when not pp
  std::string detail;
};

/// Throws NotMedian.
MapClass classify(const PPMap& psi);
/// As classify, but reports invalid maps instead of throwing.
MapClass classify(const Graph& domain, const Graph& codomain, const std::vector<Vertex>& vmap);

/// psi after phi. Throws DomainMismatch.
PPMap compose(const PPMap& psi, const PPMap& phi);

enum class ViolationKind { Merged, Transversalized };

struct Violation {
  HyperplanePair pair;
  ViolationKind kind = ViolationKind::Merged;
  std::int32_t separation = 0;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Merged pairs first by separation then ids, then tangent pairs with
/// transverse images. Absent iff psi is a convex embedding. Throws NotMedian.
std::optional<Violation> find_violation(const PPMap& psi);

/// Merged pairs only: the median-hull stopping rule.
std::optional<Violation> find_merged(const PPMap& psi);

/// Transverse hyperplanes go to transverse hyperplanes.
bool is_chiasmatic(const PPMap& psi);

/// Vertex-wise equality of the maps and their endpoints.
bool same_map(const PPMap& a, const PPMap& b);

}  // namespace cubefold
