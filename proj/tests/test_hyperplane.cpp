#include <doctest.h>

#include "cubefold/median.hpp"
#include "support.hpp"

using namespace cubefold;
using support::A;
using support::B;
using support::C;
using support::D;

namespace {

std::set<int> as_set(const VertexSet& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("hyperplane classes of standard graphs") {
  auto path = fixtures::path(4), cycle = fixtures::cycle(4), cube = fixtures::hypercube(3);
  const auto& p4 = hyperplanes(path);
  CHECK(p4.size() == 4);
  for (const auto& h : p4) CHECK(h.edges.size() == 1);

  const auto& c4 = hyperplanes(cycle);
  CHECK(c4.size() == 2);
  for (const auto& h : c4) CHECK(h.edges.size() == 2);

  const auto& q3 = hyperplanes(cube);
  CHECK(q3.size() == 3);
  for (const auto& h : q3) CHECK(h.edges.size() == 4);
}

TEST_CASE("classes agree with the Djokovic-Winkler oracle") {
  for (const auto& g : fixtures::median_corpus()) {
    CAPTURE(g.name());
    const auto& hs = hyperplanes(g);
    auto theta = oracle::theta_classes(g);
    for (std::size_t e = 0; e < g.size(); ++e)
      for (std::size_t f = 0; f < g.size(); ++f)
        CHECK((hs.class_of(EdgeId(e)) == hs.class_of(EdgeId(f))) == (theta[e] == theta[f]));
    auto sq = oracle::square_classes(g);
    for (std::size_t e = 0; e < g.size(); ++e) CHECK(sq[e] == hs.class_of(EdgeId(e)));
  }
}

TEST_CASE("halfspaces, carriers and polarity") {
  auto g = fixtures::grid(3, 3);
  const auto& hs = hyperplanes(g);
  for (const auto& h : hs) {
    REQUIRE(h.has_halfspaces());
    CHECK(contains(*h.plus, 0));
    CHECK(h.plus->size() + h.minus->size() == g.order());
    std::set<Vertex> ends;
    for (auto e : h.edges) {
      ends.insert(g.edges()[e].u);
      ends.insert(g.edges()[e].v);
    }
    CHECK(as_set(h.carrier) == std::set<int>(ends.begin(), ends.end()));
  }
}

TEST_CASE("halfspaces unavailable off median graphs") {
  auto k = fixtures::k23();
  const auto& hs = hyperplanes(k);
  CHECK(hs.size() == 1);
  CHECK_FALSE(hs.all_halfspaces());
  CHECK_THROWS_AS(separating_hyperplanes(k, 0, 1), Error);
  try {
    separating_hyperplanes(k, 0, 1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HalfspacesUnavailable);
  }
}

TEST_CASE("relations") {
  auto c4 = fixtures::cycle(4);
  CHECK(relation(c4, 0, 1).kind == RelationKind::Transverse);
  auto p2 = fixtures::path(2);
  CHECK(relation(p2, 0, 1).kind == RelationKind::Tangent);
  auto p4 = fixtures::path(4);
  auto r = relation(p4, A, D);
  CHECK(r.kind == RelationKind::Separated);
  CHECK(r.separation_distance == 2);
  CHECK(relation(p4, A, C).separation_distance == 1);
  CHECK(relation(p4, B, B).kind == RelationKind::Equal);
  CHECK_THROWS_AS(relation(p4, 0, 9), Error);
}

TEST_CASE("relation is symmetric and matches a brute-force definition") {
  for (const auto& g : fixtures::median_corpus()) {
    const auto& hs = hyperplanes(g);
    auto sq = oracle::square_classes(g);
    const int k = int(hs.size());
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        CHECK(hs.relation(a, b) == hs.relation(b, a));
        if (a == b) continue;
        bool square = false, meet = false;
        for (auto c : four_cycles(g)) {
          std::set<int> cls;
          for (int i = 0; i < 4; ++i) cls.insert(sq[g.edge_id(c[i], c[(i + 1) % 4])]);
          square = square || (cls.count(a) && cls.count(b));
        }
        for (Vertex v = 0; v < Vertex(g.order()); ++v) {
          bool ea = false, eb = false;
          for (auto w : g.neighbors(v)) {
            ea = ea || sq[g.edge_id(v, w)] == a;
            eb = eb || sq[g.edge_id(v, w)] == b;
          }
          meet = meet || (ea && eb);
        }
        auto kind = hs.relation(a, b).kind;
        if (square) CHECK(kind == RelationKind::Transverse);
        else if (meet) CHECK(kind == RelationKind::Tangent);
        else CHECK(kind == RelationKind::Separated);
      }
  }
}

TEST_CASE("canonical involution") {
  auto p2 = fixtures::path(2);
  auto inv = canonical_involution(p2, 0);
  CHECK(inv[0] == 1);
  CHECK(inv[1] == 0);
  CHECK(inv[2] == -1);

  auto c4 = fixtures::cycle(4);
  for (HyperplaneId j : {0, 1}) {
    auto s = canonical_involution(c4, j);
    for (Vertex v = 0; v < 4; ++v) {
      CHECK(s[v] >= 0);
      CHECK(c4.adjacent(v, s[v]));
    }
  }
  try {
    canonical_involution(fixtures::k23(), 0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotWellDefined);
  }
  for (const auto& g : fixtures::median_corpus())
    for (HyperplaneId j = 0; j < HyperplaneId(hyperplanes(g).size()); ++j) {
      auto s = canonical_involution(g, j);
      for (Vertex v = 0; v < Vertex(g.order()); ++v)
        if (s[v] >= 0) CHECK(s[s[v]] == v);
    }
}

TEST_CASE("separating hyperplanes") {
  auto p4 = fixtures::path(4);
  CHECK(separating_hyperplanes(p4, 0, 4) == std::vector<HyperplaneId>{A, B, C, D});
  auto c4 = fixtures::cycle(4);
  auto sep = separating_hyperplanes(c4, c4.at("c0"), c4.at("c1"));
  REQUIRE(sep.size() == 1);
  CHECK(sep[0] == hyperplanes(c4).class_of(c4, c4.at("c0"), c4.at("c1")));
  auto q3 = fixtures::hypercube(3);
  CHECK(separating_hyperplanes(q3, q3.at("000"), q3.at("111")).size() == 3);
}

TEST_CASE("fibers") {
  auto p2 = fixtures::path(2);
  auto [f0, f1] = fibers(p2, 0);
  CHECK(f0 == VertexSet{0});
  CHECK(f1 == VertexSet{1});

  // middle horizontal class of the 3x3 grid: rows of three
  auto g = fixtures::grid(3, 3);
  auto j = hyperplanes(g).class_of(g, g.at("0_0"), g.at("1_0"));
  auto [top, bottom] = fibers(g, j);
  CHECK(top.size() == 3);
  CHECK(bottom.size() == 3);
  for (auto v : top) CHECK(g.id(v)[0] == '0');
  for (auto v : bottom) CHECK(g.id(v)[0] == '1');
}

TEST_CASE("halfspaces, carriers and fibers are convex") {
  for (const auto& g : fixtures::median_corpus()) {
    if (g.order() > 30) continue;
    CAPTURE(g.name());
    for (const auto& h : hyperplanes(g)) {
      CHECK(oracle::is_convex(g, as_set(*h.plus)));
      CHECK(oracle::is_convex(g, as_set(*h.minus)));
      CHECK(oracle::is_convex(g, as_set(h.carrier)));
      auto [f0, f1] = fibers(g, h.id);
      CHECK(oracle::is_convex(g, as_set(f0)));
      CHECK(oracle::is_convex(g, as_set(f1)));
      CHECK(is_convex(g, *h.plus));
    }
  }
}

TEST_CASE("labels") {
  CHECK(hyperplane_label(0) == "A");
  CHECK(hyperplane_label(25) == "Z");
  CHECK(hyperplane_label(26) == "AA");
  auto p4 = fixtures::path(4);
  const auto& hs = hyperplanes(p4);
  CHECK(parse_hyperplane(hs, "C") == 2);
  CHECK(parse_hyperplane(hs, "H3") == 3);
  CHECK(parse_hyperplane(hs, "1") == 1);
  CHECK_THROWS_AS(parse_hyperplane(hs, "E"), Error);
}

TEST_CASE("separation distance matches the oracle") {
  for (const auto& g : fixtures::median_corpus()) {
    if (g.order() > 30) continue;
    CAPTURE(g.name());
    const auto& hs = hyperplanes(g);
    for (HyperplaneId a = 0; a < HyperplaneId(hs.size()); ++a)
      for (HyperplaneId b = a + 1; b < HyperplaneId(hs.size()); ++b) {
        const auto& r = hs.relation(a, b);
        if (r.kind != RelationKind::Separated) continue;
        CHECK(r.separation_distance == oracle::hyperplane_separation(g, hs[a].edges.front(), hs[b].edges.front()));
      }
  }
}
