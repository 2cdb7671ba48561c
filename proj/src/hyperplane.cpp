#include "cubefold/hyperplane.hpp"

#include <algorithm>
#include <numeric>

namespace cubefold {

namespace {

struct UnionFind {
  std::vector<std::int32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::int32_t find(std::int32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::string_view relation_name(RelationKind kind) {
  switch (kind) {
    case RelationKind::Equal: return "equal";
    case RelationKind::Transverse: return "transverse";
    case RelationKind::Tangent: return "tangent";
    case RelationKind::Separated: return "separated";
  }
  return "?";
}

HyperplaneSet::HyperplaneSet(const Graph& g) {
  const std::size_t m = g.size();
  const std::size_t n = g.order();
  UnionFind uf(m);
  auto cycles = four_cycles(g);
  for (const auto& c : cycles) {
    uf.unite(g.edge_id(c[0], c[1]), g.edge_id(c[2], c[3]));
    uf.unite(g.edge_id(c[1], c[2]), g.edge_id(c[3], c[0]));
  }

  // Roots are least edge ids, so numbering in root order sorts by least edge.
  std::vector<HyperplaneId> root_to_class(m, -1);
  edge_class_.assign(m, -1);
  for (std::size_t e = 0; e < m; ++e) {
    auto r = uf.find(static_cast<std::int32_t>(e));
    if (root_to_class[r] < 0) {
      root_to_class[r] = static_cast<HyperplaneId>(planes_.size());
      planes_.emplace_back();
      planes_.back().id = root_to_class[r];
    }
    edge_class_[e] = root_to_class[r];
    planes_[root_to_class[r]].edges.push_back(static_cast<EdgeId>(e));
  }

  const auto edges = g.edges();
  sides_.assign(planes_.size(), {});
  std::vector<Vertex> queue;
  for (auto& h : planes_) {
    for (EdgeId e : h.edges) {
      h.carrier.push_back(edges[e].u);
      h.carrier.push_back(edges[e].v);
    }
    std::sort(h.carrier.begin(), h.carrier.end());
    h.carrier.erase(std::unique(h.carrier.begin(), h.carrier.end()), h.carrier.end());

    std::vector<std::int32_t> comp(n, -1);
    std::int32_t count = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (comp[s] >= 0) continue;
      comp[s] = count;
      queue.assign(1, static_cast<Vertex>(s));
      for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        for (Vertex w : g.neighbors(v)) {
          if (comp[w] >= 0) continue;
          if (edge_class_[*g.edge_between(v, w)] == h.id) continue;
          comp[w] = count;
          queue.push_back(w);
        }
      }
      ++count;
    }
    if (count != 2) {
      all_halfspaces_ = false;
      continue;
    }
    VertexSet plus, minus;
    auto& side = sides_[h.id];
    side.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      // component 0 holds the basepoint
      if (comp[v] == 0) {
        plus.push_back(static_cast<Vertex>(v));
        side[v] = 1;
      } else {
        minus.push_back(static_cast<Vertex>(v));
      }
    }
    h.plus = std::move(plus);
    h.minus = std::move(minus);
  }

  const std::size_t k = planes_.size();
  std::vector<char> transverse(k * k, 0), contact(k * k, 0);
  for (const auto& c : cycles) {
    auto a = edge_class_[g.edge_id(c[0], c[1])];
    auto b = edge_class_[g.edge_id(c[1], c[2])];
    if (a == b) continue;
    transverse[a * k + b] = transverse[b * k + a] = 1;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto nb = g.neighbors(static_cast<Vertex>(v));
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        auto a = edge_class_[*g.edge_between(Vertex(v), nb[i])];
        auto b = edge_class_[*g.edge_between(Vertex(v), nb[j])];
        contact[a * k + b] = contact[b * k + a] = 1;
      }
  }

  relations_.assign(k * k, {});
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      auto& r = relations_[a * k + b];
      if (a == b) {
        r.kind = RelationKind::Equal;
      } else if (transverse[a * k + b]) {
        r.kind = RelationKind::Transverse;
      } else if (contact[a * k + b]) {
        r.kind = RelationKind::Tangent;
      } else {
        r.kind = RelationKind::Separated;
      }
    }

  // separators: L with the two carriers in opposite halfspaces of L
  for (std::size_t l = 0; l < k; ++l) {
    if (!planes_[l].has_halfspaces()) continue;
    const auto& side = sides_[l];
    std::vector<std::int8_t> where(k, -1);  // 1 plus, 0 minus, 2 both
    for (std::size_t a = 0; a < k; ++a) {
      std::int8_t w = -1;
      for (Vertex v : planes_[a].carrier) {
        std::int8_t s = side[v];
        if (w < 0) w = s;
        else if (w != s) { w = 2; break; }
      }
      where[a] = w;
    }
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        auto& r = relations_[a * k + b];
        if (r.kind != RelationKind::Separated) continue;
        if (where[a] < 2 && where[b] < 2 && where[a] != where[b]) ++r.separation_distance;
      }
  }
}

bool HyperplaneSet::on_plus(HyperplaneId j, Vertex v) const { return sides(j)[v] != 0; }

const std::vector<char>& HyperplaneSet::sides(HyperplaneId j) const {
  check(j);
  if (!planes_[j].has_halfspaces())
    fail(ErrorKind::HalfspacesUnavailable,
         "hyperplane " + hyperplane_label(j) + " does not split the graph in two");
  return sides_[j];
}

void HyperplaneSet::check(HyperplaneId j) const {
  if (j < 0 || static_cast<std::size_t>(j) >= planes_.size())
    fail(ErrorKind::UnknownHyperplane, "no hyperplane with index " + std::to_string(j));
}

const HyperplaneSet& hyperplanes(const Graph& g) {
  return g.memo<HyperplaneSet>([&g] { return HyperplaneSet(g); });
}

std::string hyperplane_label(HyperplaneId j) {
  std::string out;
  std::int64_t x = j;
  do {
    out.insert(out.begin(), static_cast<char>('A' + x % 26));
    x = x / 26 - 1;
  } while (x >= 0);
  return out;
}

HyperplaneId parse_hyperplane(const HyperplaneSet& hs, const std::string& text) {
  auto bad = [&] { fail(ErrorKind::UnknownHyperplane, "unknown hyperplane " + text); };
  if (text.empty()) bad();
  std::int64_t value = -1;
  auto digits = [&](std::size_t from) {
    if (from >= text.size()) bad();
    std::int64_t x = 0;
    for (std::size_t i = from; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9' || x > 1'000'000) bad();
      x = x * 10 + (text[i] - '0');
    }
    return x;
  };
  if (text[0] == 'H' && text.size() > 1 && text[1] >= '0' && text[1] <= '9') {
    value = digits(1);
  } else if (text[0] >= '0' && text[0] <= '9') {
    value = digits(0);
  } else {
    std::int64_t x = 0;
    for (char c : text) {
      if (c < 'A' || c > 'Z' || x > 1'000'000) bad();
      x = x * 26 + (c - 'A' + 1);
    }
    value = x - 1;
  }
  if (value < 0 || static_cast<std::size_t>(value) >= hs.size()) bad();
  return static_cast<HyperplaneId>(value);
}

HyperplaneRelation relation(const Graph& g, HyperplaneId j, HyperplaneId k) {
  const auto& hs = hyperplanes(g);
  hs.check(j);
  hs.check(k);
  return hs.relation(j, k);
}

std::vector<Vertex> canonical_involution(const Graph& g, HyperplaneId j) {
  const auto& hs = hyperplanes(g);
  hs.check(j);
  std::vector<Vertex> inv(g.order(), -1);
  const auto edges = g.edges();
  for (EdgeId e : hs[j].edges) {
    const Edge& ed = edges[e];
    for (auto [a, b] : {std::pair{ed.u, ed.v}, std::pair{ed.v, ed.u}}) {
      if (inv[a] >= 0)
        fail(ErrorKind::NotWellDefined, "vertex " + g.id(a) + " meets two edges of hyperplane " +
                                            hyperplane_label(j));
      inv[a] = b;
    }
  }
  return inv;
}

std::vector<HyperplaneId> separating_hyperplanes(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  const auto& hs = hyperplanes(g);
  if (!hs.all_halfspaces())
    fail(ErrorKind::HalfspacesUnavailable, "graph " + g.name() + " has a non-separating class");
  std::vector<HyperplaneId> out;
  for (const auto& h : hs)
    if (hs.on_plus(h.id, u) != hs.on_plus(h.id, v)) out.push_back(h.id);
  return out;
}

std::pair<VertexSet, VertexSet> fibers(const Graph& g, HyperplaneId j) {
  canonical_involution(g, j);
  const auto& hs = hyperplanes(g);
  const auto& side = hs.sides(j);
  std::pair<VertexSet, VertexSet> out;
  for (Vertex v : hs[j].carrier) (side[v] ? out.first : out.second).push_back(v);
  return out;
}

}  // namespace cubefold
