#include "cubefold/fixtures.hpp"

#include <algorithm>

#include "cubefold/fold.hpp"
#include "cubefold/hyperplane.hpp"
#include "cubefold/swell.hpp"

namespace cubefold::fixtures {

namespace {

using EdgeList = std::vector<std::pair<std::string, std::string>>;

}  // namespace

Graph path(int n) {
  std::vector<std::string> ids;
  EdgeList edges;
  for (int i = 0; i <= n; ++i) ids.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i) edges.emplace_back(ids[i], ids[i + 1]);
  return build_graph(ids, edges, "P" + std::to_string(n));
}

Graph cycle(int n) {
  std::vector<std::string> ids;
  EdgeList edges;
  for (int i = 0; i < n; ++i) ids.push_back("c" + std::to_string(i));
  for (int i = 0; i < n; ++i) edges.emplace_back(ids[i], ids[(i + 1) % n]);
  return build_graph(ids, edges, "C" + std::to_string(n));
}

Graph hypercube(int dim) {
  std::vector<std::string> ids;
  EdgeList edges;
  auto name = [dim](int x) {
    std::string s;
    for (int b = dim - 1; b >= 0; --b) s.push_back((x >> b) & 1 ? '1' : '0');
    return s;
  };
  for (int x = 0; x < (1 << dim); ++x) {
    ids.push_back(name(x));
    for (int b = 0; b < dim; ++b)
      if (!((x >> b) & 1)) edges.emplace_back(name(x), name(x | (1 << b)));
  }
  return build_graph(ids, edges, "Q" + std::to_string(dim));
}

Graph grid(int rows, int cols) {
  std::vector<std::string> ids;
  EdgeList edges;
  auto name = [](int r, int c) { return std::to_string(r) + "_" + std::to_string(c); };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      ids.push_back(name(r, c));
      if (r + 1 < rows) edges.emplace_back(name(r, c), name(r + 1, c));
      if (c + 1 < cols) edges.emplace_back(name(r, c), name(r, c + 1));
    }
  return build_graph(ids, edges, "grid" + std::to_string(rows) + "x" + std::to_string(cols));
}

Graph star(int leaves) {
  std::vector<std::string> ids{"c"};
  EdgeList edges;
  for (int i = 1; i <= leaves; ++i) {
    ids.push_back("l" + std::to_string(i));
    edges.emplace_back("c", ids.back());
  }
  return build_graph(ids, edges, "star" + std::to_string(leaves));
}

Graph tripod() { return star(3).renamed("tripod"); }

Graph product(const Graph& a, const Graph& b, const std::string& name) {
  std::vector<std::string> ids;
  EdgeList edges;
  auto pair = [&](Vertex x, Vertex y) { return a.id(x) + "." + b.id(y); };
  for (Vertex x = 0; x < Vertex(a.order()); ++x)
    for (Vertex y = 0; y < Vertex(b.order()); ++y) ids.push_back(pair(x, y));
  for (const Edge& e : a.edges())
    for (Vertex y = 0; y < Vertex(b.order()); ++y) edges.emplace_back(pair(e.u, y), pair(e.v, y));
  for (Vertex x = 0; x < Vertex(a.order()); ++x)
    for (const Edge& e : b.edges()) edges.emplace_back(pair(x, e.u), pair(x, e.v));
  return build_graph(ids, edges, name);
}

Graph k23() {
  return build_graph({"a", "b", "x", "y", "z"},
                     {{"a", "x"}, {"a", "y"}, {"a", "z"}, {"b", "x"}, {"b", "y"}, {"b", "z"}}, "K23");
}

Graph corner() {
  auto q = hypercube(3);
  VertexSet keep;
  for (Vertex v = 0; v < Vertex(q.order()); ++v)
    if (q.id(v) != "111") keep.push_back(v);
  return induced_subgraph(q, keep, "corner");
}

Graph ladder(int squares) {
  return product(path(squares), path(1), "ladder" + std::to_string(squares));
}

Graph staircase(int steps) {
  // squares at (i,i) and (i,i+1) for a rising staircase
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < steps; ++i) {
    cells.emplace_back(i, i);
    if (i + 1 < steps) cells.emplace_back(i, i + 1);
  }
  std::vector<std::string> ids;
  EdgeList edges;
  auto name = [](int r, int c) { return "s" + std::to_string(r) + "_" + std::to_string(c); };
  for (auto [r, c] : cells) {
    std::string p00 = name(r, c), p01 = name(r, c + 1), p10 = name(r + 1, c), p11 = name(r + 1, c + 1);
    for (const auto& id : {p00, p01, p10, p11}) ids.push_back(id);
    edges.emplace_back(p00, p01);
    edges.emplace_back(p10, p11);
    edges.emplace_back(p00, p10);
    edges.emplace_back(p01, p11);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return build_graph(ids, edges, "stair" + std::to_string(steps));
}

Graph two_squares() { return ladder(2).renamed("two_squares"); }

Graph random_tree(int n, std::mt19937& rng) {
  std::vector<std::string> ids;
  EdgeList edges;
  for (int i = 0; i < n; ++i) {
    ids.push_back("t" + std::to_string(i));
    if (i > 0) {
      std::uniform_int_distribution<int> pick(0, i - 1);
      edges.emplace_back(ids[pick(rng)], ids[i]);
    }
  }
  return build_graph(ids, edges, "tree" + std::to_string(n));
}

Graph random_median(int tree_size, int moves, std::size_t max_vertices, std::mt19937& rng) {
  Graph g = random_tree(tree_size, rng);
  for (int step = 0; step < moves; ++step) {
    const auto& hs = hyperplanes(g);
    std::vector<HyperplanePair> tangent, contact;
    for (HyperplaneId a = 0; a < HyperplaneId(hs.size()); ++a)
      for (HyperplaneId b = a + 1; b < HyperplaneId(hs.size()); ++b) {
        auto kind = hs.relation(a, b).kind;
        if (kind == RelationKind::Tangent) tangent.emplace_back(a, b);
        if (kind != RelationKind::Separated) contact.emplace_back(a, b);
      }
    bool do_swell = std::uniform_int_distribution<int>(0, 3)(rng) != 0;
    if (do_swell && !tangent.empty()) {
      auto p = tangent[std::uniform_int_distribution<std::size_t>(0, tangent.size() - 1)(rng)];
      auto next = swell_pair(g, p.first, p.second).target;
      if (next.order() <= max_vertices) g = next;
    } else if (!contact.empty() && hs.size() > 2) {
      auto p = contact[std::uniform_int_distribution<std::size_t>(0, contact.size() - 1)(rng)];
      g = fold_pair(g, p.first, p.second).target;
    }
  }
  return g.renamed("random");
}

std::vector<Graph> median_corpus() {
  return {path(1),    path(4),       path(7),      cycle(4),    hypercube(3), hypercube(4),
          grid(3, 3), grid(4, 5),    star(5),      tripod(),    ladder(3),    staircase(4),
          two_squares(), product(hypercube(3), path(2), "Q3xP2"),
          product(star(3), path(1), "tripod_x_edge")};
}

}  // namespace cubefold::fixtures
