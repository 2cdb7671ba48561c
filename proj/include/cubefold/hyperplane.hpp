#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubefold/graph.hpp"

namespace cubefold {

using HyperplaneId = std::int32_t;
using HyperplanePair = std::pair<HyperplaneId, HyperplaneId>;

struct Hyperplane {
  HyperplaneId id = 0;
  std::vector<EdgeId> edges;
  VertexSet carrier;
  // absent when removing the class does not leave exactly two components
  std::optional<VertexSet> plus;
  std::optional<VertexSet> minus;

  bool has_halfspaces() const { return plus.has_value(); }
};

enum class RelationKind { Equal, Transverse, Tangent, Separated };

struct HyperplaneRelation {
  RelationKind kind = RelationKind::Equal;
  std::int32_t separation_distance = 0;
  friend bool operator==(const HyperplaneRelation&, const HyperplaneRelation&) = default;
};

std::string_view relation_name(RelationKind kind);

/// All parallelism classes of one graph, ordered by least edge.
class HyperplaneSet {
 public:
  explicit HyperplaneSet(const Graph& g);

  std::size_t size() const { return planes_.size(); }
  const Hyperplane& operator[](HyperplaneId j) const { return planes_.at(j); }
  auto begin() const { return planes_.begin(); }
  auto end() const { return planes_.end(); }

  HyperplaneId class_of(EdgeId e) const { return edge_class_[e]; }
  HyperplaneId class_of(const Graph& g, Vertex u, Vertex v) const {
    return edge_class_[g.edge_id(u, v)];
  }

  bool all_halfspaces() const { return all_halfspaces_; }
  /// True when v is on the plus side of j. Throws HalfspacesUnavailable.
  bool on_plus(HyperplaneId j, Vertex v) const;
  const std::vector<char>& sides(HyperplaneId j) const;

  const HyperplaneRelation& relation(HyperplaneId j, HyperplaneId k) const {
    return relations_[static_cast<std::size_t>(j) * planes_.size() + k];
  }
  bool transverse(HyperplaneId j, HyperplaneId k) const {
    return relation(j, k).kind == RelationKind::Transverse;
  }
  bool in_contact(HyperplaneId j, HyperplaneId k) const {
    auto kind = relation(j, k).kind;
    return kind == RelationKind::Transverse || kind == RelationKind::Tangent;
  }

  void check(HyperplaneId j) const;

 private:
  std::vector<Hyperplane> planes_;
  std::vector<HyperplaneId> edge_class_;
  std::vector<std::vector<char>> sides_;
  std::vector<HyperplaneRelation> relations_;
  bool all_halfspaces_ = true;
};

/// Memoized per graph.
const HyperplaneSet& hyperplanes(const Graph& g);

/// A, B, ..., Z, AA, AB, ...
std::string hyperplane_label(HyperplaneId j);
/// Accepts letter labels, `H<k>` and bare indices. Throws UnknownHyperplane.
HyperplaneId parse_hyperplane(const HyperplaneSet& hs, const std::string& text);

HyperplaneRelation relation(const Graph& g, HyperplaneId j, HyperplaneId k);

/// involution[v] is the other endpoint of v's J-edge, or -1 off the carrier.
/// Throws NotWellDefined when a vertex meets two J-edges.
std::vector<Vertex> canonical_involution(const Graph& g, HyperplaneId j);

/// Throws HalfspacesUnavailable.
std::vector<HyperplaneId> separating_hyperplanes(const Graph& g, Vertex u, Vertex v);

/// (carrier on the plus side, carrier on the minus side).
std::pair<VertexSet, VertexSet> fibers(const Graph& g, HyperplaneId j);

}  // namespace cubefold
