#pragma once

#include <random>
#include <string>
#include <vector>

#include "cubefold/equivariance.hpp"
#include "cubefold/fixtures.hpp"
#include "cubefold/fold.hpp"
#include "cubefold/io.hpp"
#include "cubefold/swell.hpp"
#include "oracle.hpp"

namespace support {

using namespace cubefold;

inline std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

inline Graph load(const std::string& name) { return read_graph(fixture(name)); }

// P4 hyperplanes in path order.
inline constexpr HyperplaneId A = 0, B = 1, C = 2, D = 3;

inline std::vector<HyperplanePair> pairs_of(const Graph& g, RelationKind want, bool or_transverse = false) {
  const auto& hs = hyperplanes(g);
  std::vector<HyperplanePair> out;
  for (HyperplaneId a = 0; a < HyperplaneId(hs.size()); ++a)
    for (HyperplaneId b = a + 1; b < HyperplaneId(hs.size()); ++b) {
      auto k = hs.relation(a, b).kind;
      if (k == want || (or_transverse && k == RelationKind::Transverse)) out.emplace_back(a, b);
    }
  return out;
}

inline std::vector<HyperplanePair> contact_pairs(const Graph& g) {
  return pairs_of(g, RelationKind::Tangent, true);
}

// All sub-collections of `pool` with 1..k members.
inline std::vector<PairCollection> subsets(const std::vector<HyperplanePair>& pool, std::size_t k) {
  std::vector<PairCollection> out;
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (!idx.empty()) {
      PairCollection p;
      for (auto i : idx) p.push_back(pool[i]);
      out.push_back(p);
    }
    if (idx.size() == k) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

struct GeneratedMap {
  std::string label;
  PPMap psi;
};

// Parallel-preserving maps built by composing random folds and swells of a
// random median domain, sometimes pushed into a product with an edge.
inline std::vector<GeneratedMap> generated_maps(std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<GeneratedMap> out;
  while (out.size() < count) {
    const std::size_t i = out.size();
    Graph x = fixtures::random_median(5 + int(i % 4), 3 + int(i % 5), 18, rng);
    PPMap psi = identity_map(x);
    const int steps = 1 + int(rng() % 4);
    std::string label = "map" + std::to_string(i) + ":";
    for (int s = 0; s < steps; ++s) {
      const Graph& y = psi.codomain();
      auto tangent = pairs_of(y, RelationKind::Tangent);
      auto contact = contact_pairs(y);
      bool swell = rng() % 2 == 0 && !tangent.empty() && y.order() < 24;
      if (swell) {
        auto p = tangent[rng() % tangent.size()];
        psi = compose(swell_pair(y, p.first, p.second).embedding, psi);
        label += " swell";
      } else if (!contact.empty()) {
        auto p = contact[rng() % contact.size()];
        psi = compose(fold_pair(y, p.first, p.second).zeta, psi);
        label += " fold";
      }
    }
    if (i % 3 == 1) {
      const Graph& y = psi.codomain();
      Graph yy = fixtures::product(y, fixtures::path(1), "Yx1");
      std::vector<Vertex> f(y.order());
      for (Vertex v = 0; v < Vertex(y.order()); ++v) f[v] = yy.at(y.id(v) + ".v0");
      psi = compose(validate(y, yy, f), psi);
      label += " product";
    }
    out.push_back({label, psi});
  }
  return out;
}

// Random walks of random trees into small median graphs. Every edge of a
// tree is its own class, so these are parallel-preserving and tend to merge
// separated hyperplanes.
inline std::vector<GeneratedMap> tree_walks(std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  const std::vector<Graph> targets{fixtures::grid(3, 3), fixtures::hypercube(3), fixtures::ladder(3),
                                   fixtures::product(fixtures::tripod(), fixtures::path(1), "T1"),
                                   fixtures::staircase(3)};
  std::vector<GeneratedMap> out;
  for (std::size_t i = 0; i < count; ++i) {
    Graph t = fixtures::random_tree(5 + int(i % 5), rng);
    const Graph& y = targets[i % targets.size()];
    std::vector<Vertex> f(t.order(), -1), queue{0};
    f[0] = Vertex(rng() % y.order());
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (Vertex w : t.neighbors(queue[head]))
        if (f[w] < 0) {
          auto nb = y.neighbors(f[queue[head]]);
          f[w] = nb[rng() % nb.size()];
          queue.push_back(w);
        }
    out.push_back({"walk" + std::to_string(i) + " into " + y.name(), validate(t, y, f)});
  }
  return out;
}

// Two squares sharing the edge r-s; rungs p-q, s-r, t-u form one class.
inline Graph two_squares_z() {
  return build_graph({"p", "q", "r", "s", "t", "u"},
                     {{"p", "q"}, {"q", "r"}, {"r", "u"}, {"p", "s"}, {"s", "t"}, {"r", "s"}, {"t", "u"}},
                     "Z");
}

// P4 wrapped around Z so that its end edges land in the rung class.
inline PPMap wrapped_path_map() {
  return map_from_ids(fixtures::path(4), two_squares_z(),
                      {{"v0", "p"}, {"v1", "q"}, {"v2", "r"}, {"v3", "u"}, {"v4", "t"}});
}

// P4 folded onto P2 by folding everything.
inline PPMap fold_everything_map() {
  return map_from_ids(fixtures::path(4), fixtures::path(2),
                      {{"v0", "v0"}, {"v1", "v1"}, {"v2", "v2"}, {"v3", "v1"}, {"v4", "v0"}});
}

// Kind of the Error thrown by f, or InternalError when nothing is thrown.
template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalError;
}

template <class F>
std::string message_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

inline bool is_automorphism(const Graph& g, const std::vector<Vertex>& p) {
  std::vector<char> hit(g.order(), 0);
  for (auto v : p) {
    if (v < 0 || v >= Vertex(g.order()) || hit[v]) return false;
    hit[v] = 1;
  }
  for (auto e : g.edges())
    if (!g.adjacent(p[e.u], p[e.v])) return false;
  return true;
}

// g_i' . step = step . g_i on every vertex.
inline bool square_commutes(const PPMap& step, const SymmetryGroup& G, const InducedAction& act) {
  if (act.generator_images.size() != G.generators.size()) return false;
  for (std::size_t i = 0; i < G.generators.size(); ++i)
    for (Vertex v = 0; v < Vertex(step.domain().order()); ++v)
      if (act.generator_images[i][step(v)] != step(G.generators[i][v])) return false;
  return true;
}

}  // namespace support
