#include "cubefold/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "cubefold/kernels.hpp"

namespace cubefold {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownHyperplane: return "UnknownHyperplane";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::HalfspacesUnavailable: return "HalfspacesUnavailable";
    case ErrorKind::NotMedian: return "NotMedian";
    case ErrorKind::DisconnectedSubset: return "DisconnectedSubset";
    case ErrorKind::NotInContact: return "NotInContact";
    case ErrorKind::NotTangent: return "NotTangent";
    case ErrorKind::NotFactorizable: return "NotFactorizable";
    case ErrorKind::MissingFourthCorner: return "MissingFourthCorner";
    case ErrorKind::EdgeCollapsed: return "EdgeCollapsed";
    case ErrorKind::NotAnEdge: return "NotAnEdge";
    case ErrorKind::ParallelBroken: return "ParallelBroken";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::ImagesDiffer: return "ImagesDiffer";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Error";
}

bool contains(const VertexSet& set, Vertex v) {
  return std::binary_search(set.begin(), set.end(), v);
}

Graph::Slot& Graph::Memo::slot(std::type_index key) {
  std::lock_guard lock(mutex);
  auto& p = slots[key];
  if (!p) p = std::make_unique<Slot>();
  return *p;
}

Graph::Graph() {
  static const std::shared_ptr<const Impl> point = [] {
    auto impl = std::make_shared<Impl>();
    impl->name = "point";
    impl->ids = {"v0"};
    impl->adjacency.assign(1, {});
    impl->incident.assign(1, {});
    return impl;
  }();
  impl_ = point;
}

Graph Graph::build(std::vector<std::string> vertices,
                   const std::vector<std::pair<std::string, std::string>>& edges,
                   std::string name) {
  if (vertices.empty()) fail(ErrorKind::Disconnected, "graph has no vertices");
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i] == vertices[i - 1])
      fail(ErrorKind::DuplicateVertex, "vertex " + vertices[i] + " declared twice");

  auto index = [&](const std::string& id) -> Vertex {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), id);
    if (it == vertices.end() || *it != id)
      fail(ErrorKind::UnknownEndpoint, "edge endpoint " + id + " is not a vertex");
    return static_cast<Vertex>(it - vertices.begin());
  };

  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a == b) fail(ErrorKind::SelfLoop, "self-loop at " + a);
    Vertex u = index(a), v = index(b);
    list.push_back(u < v ? Edge{u, v} : Edge{v, u});
  }
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());

  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->ids = std::move(vertices);
  const std::size_t n = impl->ids.size();
  impl->adjacency.assign(n, {});
  for (const Edge& e : list) {
    impl->adjacency[e.u].push_back(e.v);
    impl->adjacency[e.v].push_back(e.u);
  }
  for (auto& row : impl->adjacency) std::sort(row.begin(), row.end());
  impl->edges = std::move(list);
  impl->incident.assign(n, {});
  for (std::size_t v = 0; v < n; ++v) {
    for (Vertex w : impl->adjacency[v]) {
      Edge key = static_cast<Vertex>(v) < w ? Edge{static_cast<Vertex>(v), w}
                                            : Edge{w, static_cast<Vertex>(v)};
      auto it = std::lower_bound(impl->edges.begin(), impl->edges.end(), key);
      impl->incident[v].push_back(static_cast<EdgeId>(it - impl->edges.begin()));
    }
  }

  std::vector<char> seen(n, 0);
  std::deque<Vertex> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : impl->adjacency[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
  }
  if (reached != n) {
    for (std::size_t v = 0; v < n; ++v)
      if (!seen[v])
        fail(ErrorKind::Disconnected,
             "vertex " + impl->ids[v] + " unreachable from " + impl->ids[0]);
  }

  Graph g;
  g.impl_ = std::move(impl);
  return g;
}

Graph Graph::renamed(std::string name) const {
  std::vector<std::pair<std::string, std::string>> list;
  for (const Edge& e : edges()) list.emplace_back(id(e.u), id(e.v));
  return build(std::vector<std::string>(ids().begin(), ids().end()), list, std::move(name));
}

const std::string& Graph::id(Vertex v) const {
  check_vertex(v);
  return impl_->ids[v];
}

std::optional<Vertex> Graph::find(std::string_view id) const {
  const auto& ids = impl_->ids;
  auto it = std::lower_bound(ids.begin(), ids.end(), id,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == ids.end() || *it != id) return std::nullopt;
  return static_cast<Vertex>(it - ids.begin());
}

Vertex Graph::at(std::string_view id) const {
  auto v = find(id);
  if (!v) fail(ErrorKind::UnknownVertex, "no vertex " + std::string(id) + " in " + name());
  return *v;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= order())
    fail(ErrorKind::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& row = impl_->adjacency[u];
  return std::binary_search(row.begin(), row.end(), v);
}

std::optional<EdgeId> Graph::edge_between(Vertex u, Vertex v) const {
  const auto& row = impl_->adjacency[u];
  auto it = std::lower_bound(row.begin(), row.end(), v);
  if (it == row.end() || *it != v) return std::nullopt;
  return impl_->incident[u][it - row.begin()];
}

EdgeId Graph::edge_id(Vertex u, Vertex v) const {
  auto e = edge_between(u, v);
  if (!e) fail(ErrorKind::NotAnEdge, id(u) + " and " + id(v) + " are not adjacent");
  return *e;
}

const DistanceMatrix& Graph::distances() const {
  return memo<DistanceMatrix>([this] { return kernels::all_pairs_bfs(*this); });
}

bool Graph::same_as(const Graph& other) const {
  if (order() != other.order() || size() != other.size()) return false;
  return std::equal(ids().begin(), ids().end(), other.ids().begin()) &&
         std::equal(edges().begin(), edges().end(), other.edges().begin());
}

Graph build_graph(std::vector<std::string> vertices,
                  const std::vector<std::pair<std::string, std::string>>& edges,
                  std::string name) {
  return Graph::build(std::move(vertices), edges, std::move(name));
}

std::int32_t distance(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  return g.distance(u, v);
}

VertexSet interval(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  const auto& d = g.distances();
  VertexSet out;
  for (Vertex w = 0; w < static_cast<Vertex>(g.order()); ++w)
    if (d(u, w) + d(w, v) == d(u, v)) out.push_back(w);
  return out;
}

FourCycle canonical_cycle(FourCycle c) {
  auto low = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), low, c.end());
  if (c[1] > c[3]) std::swap(c[1], c[3]);
  return c;
}

std::vector<FourCycle> four_cycles(const Graph& g) {
  std::vector<FourCycle> out;
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex a = 0; a < n; ++a) {
    auto na = g.neighbors(a);
    for (std::size_t i = 0; i < na.size(); ++i) {
      Vertex b = na[i];
      if (b < a) continue;
      for (std::size_t j = i + 1; j < na.size(); ++j) {
        Vertex d = na[j];
        if (d < a) continue;
        for (Vertex c : g.neighbors(b))
          if (c > a && c != d && g.adjacent(c, d)) out.push_back({a, b, c, d});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<std::vector<std::int32_t>> profiles(const Graph& g) {
  const auto& d = g.distances();
  std::vector<std::vector<std::int32_t>> out(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    auto& p = out[v];
    p.push_back(static_cast<std::int32_t>(g.degree(static_cast<Vertex>(v))));
    std::vector<std::int32_t> row(g.order());
    for (std::size_t w = 0; w < g.order(); ++w)
      row[w] = d(static_cast<Vertex>(v), static_cast<Vertex>(w));
    std::sort(row.begin(), row.end());
    p.insert(p.end(), row.begin(), row.end());
  }
  return out;
}

}  // namespace

std::optional<std::vector<Vertex>> is_isomorphic(const Graph& g1, const Graph& g2) {
  const std::size_t n = g1.order();
  if (n != g2.order() || g1.size() != g2.size()) return std::nullopt;
  auto p1 = profiles(g1), p2 = profiles(g2);
  {
    auto s1 = p1, s2 = p2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }

  // Assign in BFS order so each new vertex has an assigned neighbour.
  std::vector<Vertex> order;
  {
    std::vector<char> seen(n, 0);
    std::deque<Vertex> q{0};
    seen[0] = 1;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop_front();
      order.push_back(v);
      for (Vertex w : g1.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          q.push_back(w);
        }
    }
  }

  const auto& d1 = g1.distances();
  const auto& d2 = g2.distances();
  std::vector<Vertex> map(n, -1);
  std::vector<char> used(n, 0);

  auto consistent = [&](std::size_t depth, Vertex cand) {
    Vertex v = order[depth];
    if (p1[v] != p2[cand]) return false;
    for (std::size_t k = 0; k < depth; ++k) {
      Vertex w = order[k];
      if (d1(v, w) != d2(cand, map[w])) return false;
    }
    return true;
  };

  std::vector<Vertex> next(n, 0);
  std::size_t depth = 0;
  while (true) {
    if (depth == n) return map;
    Vertex v = order[depth];
    bool placed = false;
    for (Vertex c = next[depth]; c < static_cast<Vertex>(n); ++c) {
      if (used[c] || !consistent(depth, c)) continue;
      map[v] = c;
      used[c] = 1;
      next[depth] = c + 1;
      placed = true;
      break;
    }
    if (placed) {
      ++depth;
      if (depth < n) next[depth] = 0;
      continue;
    }
    if (depth == 0) return std::nullopt;
    next[depth] = 0;
    --depth;
    Vertex back = order[depth];
    used[map[back]] = 0;
    map[back] = -1;
  }
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep, std::string name) {
  std::vector<std::string> ids;
  for (Vertex v : keep) ids.push_back(g.id(v));
  std::vector<std::pair<std::string, std::string>> list;
  for (const Edge& e : g.edges())
    if (contains(keep, e.u) && contains(keep, e.v)) list.emplace_back(g.id(e.u), g.id(e.v));
  return build_graph(std::move(ids), list, std::move(name));
}

}  // namespace cubefold
