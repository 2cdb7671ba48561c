#include <doctest.h>

#include "support.hpp"

using namespace cubefold;

TEST_CASE("build_graph validates input") {
  auto p1 = build_graph({"a", "b"}, {{"a", "b"}});
  CHECK(p1.order() == 2);
  CHECK(p1.size() == 1);

  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InternalError;
  };
  CHECK(kind_of([] { build_graph({"a", "b", "c"}, {{"a", "b"}, {"c", "c"}}); }) == ErrorKind::SelfLoop);
  CHECK(kind_of([] { build_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}); }) ==
        ErrorKind::Disconnected);
  CHECK(kind_of([] { build_graph({"a", "a"}, {}); }) == ErrorKind::DuplicateVertex);
  CHECK(kind_of([] { build_graph({"a", "b"}, {{"a", "z"}}); }) == ErrorKind::UnknownEndpoint);
  CHECK(kind_of([] { fixtures::path(2).at("nope"); }) == ErrorKind::UnknownVertex);
}

TEST_CASE("duplicate edges collapse and ids are sorted") {
  auto g = build_graph({"b", "a", "c"}, {{"a", "b"}, {"b", "a"}, {"b", "c"}});
  CHECK(g.size() == 2);
  CHECK(g.id(0) == "a");
  CHECK(g.id(2) == "c");
}

TEST_CASE("distance") {
  auto p4 = fixtures::path(4);
  CHECK(distance(p4, p4.at("v0"), p4.at("v4")) == 4);
  auto c4 = fixtures::cycle(4);
  CHECK(distance(c4, c4.at("c0"), c4.at("c2")) == 2);
  auto q3 = fixtures::hypercube(3);
  CHECK(distance(q3, q3.at("000"), q3.at("111")) == 3);
  CHECK_THROWS_AS(distance(q3, 0, 99), Error);
}

TEST_CASE("interval") {
  auto p4 = fixtures::path(4);
  CHECK(interval(p4, 0, 4).size() == 5);
  auto c4 = fixtures::cycle(4);
  CHECK(interval(c4, c4.at("c0"), c4.at("c2")).size() == 4);
  CHECK(interval(c4, 1, 1) == VertexSet{1});
}

TEST_CASE("four_cycles") {
  CHECK(four_cycles(fixtures::path(4)).empty());
  CHECK(four_cycles(fixtures::cycle(4)).size() == 1);
  CHECK(four_cycles(fixtures::hypercube(3)).size() == 6);
  CHECK(four_cycles(fixtures::k23()).size() == 3);
  for (const auto& g : fixtures::median_corpus())
    for (auto c : four_cycles(g)) CHECK(canonical_cycle(c) == c);
}

TEST_CASE("is_isomorphic") {
  auto p2 = fixtures::path(2);
  auto renamed = build_graph({"x", "y", "z"}, {{"y", "z"}, {"z", "x"}});
  auto w = is_isomorphic(p2, renamed);
  REQUIRE(w);
  for (auto e : p2.edges()) CHECK(renamed.adjacent((*w)[e.u], (*w)[e.v]));
  CHECK_FALSE(is_isomorphic(p2, fixtures::cycle(4)));

  auto c4xp1 = fixtures::product(fixtures::cycle(4), fixtures::path(1), "C4xP1");
  CHECK(is_isomorphic(fixtures::hypercube(3), c4xp1));
  CHECK(oracle::brute_isomorphism(fixtures::hypercube(3), c4xp1));
  CHECK_FALSE(is_isomorphic(fixtures::corner(), fixtures::ladder(3)));
  CHECK_FALSE(oracle::brute_isomorphism(fixtures::corner(), fixtures::ladder(3)));
}

TEST_CASE("metric and interval properties on the corpus") {
  for (const auto& g : fixtures::median_corpus()) {
    auto d = oracle::distances(g);
    const int n = int(g.order());
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        REQUIRE(g.distance(u, v) == d[u][v]);
        CHECK(d[u][v] == d[v][u]);
        CHECK((d[u][v] == 0) == (u == v));
      }
    for (int u = 0; u < n; u += 3)
      for (int v = 0; v < n; v += 2) {
        auto iv = interval(g, u, v);
        for (int w = 0; w < n; ++w) {
          CHECK(d[u][w] <= d[u][v] + d[v][w]);
          CHECK(contains(iv, w) == (d[u][w] + d[w][v] == d[u][v]));
        }
      }
  }
}

TEST_CASE("induced subgraph and renaming") {
  auto corner = fixtures::corner();
  CHECK(corner.order() == 7);
  CHECK(corner.size() == 9);
  auto r = corner.renamed("other");
  CHECK(r.name() == "other");
  CHECK(r.same_as(corner));
}
