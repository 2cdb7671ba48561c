#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <typeindex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cubefold/error.hpp"

namespace cubefold {

/// Index of a vertex inside one Graph. Indices follow the identifier order,
/// so index 0 is always the basepoint (least identifier).
using Vertex = std::int32_t;
using EdgeId = std::int32_t;

struct Edge {
  Vertex u;
  Vertex v;  // u < v
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

bool contains(const VertexSet& set, Vertex v);

/// Row-major all-pairs distance table.
struct DistanceMatrix {
  std::size_t n = 0;
  std::vector<std::int32_t> d;

  std::int32_t operator()(Vertex u, Vertex v) const {
    return d[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)];
  }
};

/// Finite, connected, simple, undirected graph with string identifiers.
/// Immutable; copies share storage. Derived data (distances, hyperplanes,
/// median flag) is memoized per graph and safe to request concurrently.
class Graph {
 public:
  Graph();

  /// Validates and builds a graph. Duplicate edges are merged.
  /// Throws DuplicateVertex, UnknownEndpoint, SelfLoop, Disconnected.
  static Graph build(std::vector<std::string> vertices,
                     const std::vector<std::pair<std::string, std::string>>& edges,
                     std::string name = "g");

  const std::string& name() const { return impl_->name; }
  Graph renamed(std::string name) const;

  std::size_t order() const { return impl_->ids.size(); }
  std::size_t size() const { return impl_->edges.size(); }

  const std::string& id(Vertex v) const;
  std::span<const std::string> ids() const { return impl_->ids; }
  std::optional<Vertex> find(std::string_view id) const;
  /// Throws UnknownVertex.
  Vertex at(std::string_view id) const;
  void check_vertex(Vertex v) const;

  std::span<const Vertex> neighbors(Vertex v) const { return impl_->adjacency[v]; }
  std::size_t degree(Vertex v) const { return impl_->adjacency[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  std::span<const Edge> edges() const { return impl_->edges; }
  std::optional<EdgeId> edge_between(Vertex u, Vertex v) const;
  EdgeId edge_id(Vertex u, Vertex v) const;

  const DistanceMatrix& distances() const;
  std::int32_t distance(Vertex u, Vertex v) const { return distances()(u, v); }

  /// Same identifiers and same edges. Names are ignored.
  bool same_as(const Graph& other) const;

  /// Per-graph memo slot keyed by result type.
  template <class T, class F>
  const T& memo(F&& compute) const {
    Slot& slot = impl_->memo.slot(std::type_index(typeid(T)));
    std::call_once(slot.once, [&] { slot.value = std::make_shared<T>(compute()); });
    return *static_cast<const T*>(slot.value.get());
  }

 private:
  struct Slot {
    std::once_flag once;
    std::shared_ptr<void> value;
  };
  struct Memo {
    std::mutex mutex;
    std::unordered_map<std::type_index, std::unique_ptr<Slot>> slots;
    Slot& slot(std::type_index key);
  };
  struct Impl {
    std::string name;
    std::vector<std::string> ids;
    std::vector<std::vector<Vertex>> adjacency;  // sorted
    std::vector<Edge> edges;                     // sorted
    std::vector<std::vector<EdgeId>> incident;   // parallel to adjacency
    mutable Memo memo;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Builder entry point with the module's error contract.
Graph build_graph(std::vector<std::string> vertices,
                  const std::vector<std::pair<std::string, std::string>>& edges,
                  std::string name = "g");

/// Shortest-path length. Throws UnknownVertex.
std::int32_t distance(const Graph& g, Vertex u, Vertex v);

/// Vertices on some geodesic from u to v.
VertexSet interval(const Graph& g, Vertex u, Vertex v);

/// A 4-cycle a-b-c-d-a in canonical form: a is the least index and b < d.
using FourCycle = std::array<Vertex, 4>;

FourCycle canonical_cycle(FourCycle cycle);

/// Every 4-cycle (induced or not), each once, in lexicographic order.
std::vector<FourCycle> four_cycles(const Graph& g);

/// Adjacency-preserving bijection g1 -> g2 (indexed by g1 vertex), if any.
std::optional<std::vector<Vertex>> is_isomorphic(const Graph& g1, const Graph& g2);

/// Induced subgraph on `keep` (must be connected).
Graph induced_subgraph(const Graph& g, const VertexSet& keep, std::string name);

}  // namespace cubefold
