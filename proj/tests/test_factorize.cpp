#include <doctest.h>

#include "cubefold/median.hpp"
#include "support.hpp"

using namespace cubefold;
using support::A;
using support::B;
using support::C;
using support::D;
using support::kind_of;

namespace {

std::vector<std::string> describe_moves(const FactorizationTrace& t) {
  std::vector<std::string> out;
  for (const auto& m : t.moves) out.push_back(std::string(move_name(m.kind)) + format_pairs(m.pairs));
  return out;
}

std::set<int> image_set(const PPMap& f) {
  auto img = f.image();
  return {img.begin(), img.end()};
}

}  // namespace

TEST_CASE("convex embeddings need no moves") {
  auto edge = map_from_ids(fixtures::path(1), fixtures::path(2), {{"v0", "v1"}, {"v1", "v2"}});
  for (auto mode : {Mode::MedianHull, Mode::ConvexHull}) {
    auto t = factorize(edge, mode);
    CHECK(t.moves.empty());
    CHECK(same_map(t.iota, edge));
    CHECK(classify(t.eta).kind == MapKind::Isometry);
    CHECK(t.mode == mode);
  }
}

TEST_CASE("corner of a square") {
  auto corner = map_from_ids(fixtures::path(2), fixtures::cycle(4), {{"v0", "c0"}, {"v1", "c1"}, {"v2", "c2"}});
  auto med = factorize(corner, Mode::MedianHull);
  CHECK(med.moves.empty());
  CHECK(classify(med.iota).kind == MapKind::IsometricEmbedding);

  auto conv = factorize(corner, Mode::ConvexHull);
  CHECK(describe_moves(conv) == std::vector<std::string>{"swell{A:B}"});
  CHECK(is_isomorphic(conv.iota.domain(), fixtures::cycle(4)));
  CHECK(classify(conv.iota).kind == MapKind::Isometry);
}

TEST_CASE("wrapped path") {
  auto psi = support::wrapped_path_map();
  auto t = factorize(psi, Mode::MedianHull);
  CHECK(describe_moves(t) == std::vector<std::string>{"swell{A:B}", "swell{A:C}", "fold{A:D}"});
  CHECK(same_map(compose(t.iota, t.eta), psi));
  CHECK(classify(t.iota).kind >= MapKind::IsometricEmbedding);
  CHECK(image_set(t.iota) == oracle::median_hull(psi.codomain(), image_set(psi)));
  const Move& last = t.moves.back();
  CHECK(hyperplanes(last.after).size() + 1 == hyperplanes(last.before).size());
  for (std::size_t k = 0; k + 1 < t.moves.size(); ++k) {
    CHECK(t.moves[k].after.same_as(t.moves[k + 1].before));
    CHECK(hyperplanes(t.moves[k].after).size() == hyperplanes(t.moves[k].before).size());
  }
}

TEST_CASE("fold everything") {
  auto psi = support::fold_everything_map();
  auto t = factorize(psi, Mode::MedianHull);
  // labels refer to each move's own source: the second fold is the old {A:D}
  CHECK(describe_moves(t) == std::vector<std::string>{"fold{B:C}", "fold{A:C}"});
  CHECK(is_isomorphic(t.iota.domain(), fixtures::path(2)));
  CHECK(classify(t.iota).kind == MapKind::Isometry);
  CHECK(same_map(compose(t.iota, t.eta), psi));
  CHECK(same_map(t.eta, compose(t.moves[1].step_map, t.moves[0].step_map)));
}

TEST_CASE("fold_unique_pair") {
  auto psi = support::wrapped_path_map();
  auto part = fold_unique_pair(psi, A, D);
  CHECK(part.eta.hyperplane(A) == part.eta.hyperplane(D));
  CHECK(same_map(compose(part.psi, part.eta), psi));
  REQUIRE(!part.moves.empty());
  CHECK(part.moves.back().kind == MoveKind::Fold);

  auto everything = fold_unique_pair(support::fold_everything_map(), B, C);
  CHECK(everything.moves.size() == 1);

  CHECK(kind_of([&] { fold_unique_pair(psi, A, B); }) == ErrorKind::ImagesDiffer);
  CHECK(kind_of([&] { fold_unique_pair(psi, A, A); }) == ErrorKind::ImagesDiffer);
  CHECK(kind_of([&] { fold_unique_pair(psi, A, 9); }) == ErrorKind::UnknownHyperplane);
}

TEST_CASE("factorize rejects non-median endpoints") {
  auto k = fixtures::k23();
  CHECK(kind_of([&] { factorize(identity_map(k), Mode::MedianHull); }) == ErrorKind::NotMedian);
}

TEST_CASE("factorization contract on generated maps") {
  auto maps = support::generated_maps(16, 81);
  for (auto& w : support::tree_walks(16, 82)) maps.push_back(w);
  for (const auto& [label, psi] : maps)
    for (auto mode : {Mode::MedianHull, Mode::ConvexHull}) {
      CAPTURE(label);
      CAPTURE(mode_name(mode));
      auto t = factorize(psi, mode);
      CHECK(same_map(compose(t.iota, t.eta), psi));
      auto kind = classify(t.iota).kind;
      auto img = image_set(psi);
      if (mode == Mode::MedianHull) {
        CHECK(kind >= MapKind::IsometricEmbedding);
        CHECK(image_set(t.iota) == oracle::median_hull(psi.codomain(), img));
      } else {
        CHECK(kind >= MapKind::ConvexEmbedding);
        CHECK(image_set(t.iota) == oracle::convex_hull(psi.codomain(), img));
      }
      const Graph* at = &psi.domain();
      for (const auto& m : t.moves) {
        CHECK(m.before.same_as(*at));
        CHECK(m.step_map.domain().same_as(m.before));
        CHECK(m.step_map.codomain().same_as(m.after));
        CHECK(oracle::is_median(m.after));
        if (m.kind == MoveKind::Fold) CHECK(hyperplanes(m.after).size() < hyperplanes(m.before).size());
        else CHECK(hyperplanes(m.after).size() == hyperplanes(m.before).size());
        at = &m.after;
      }
      CHECK(t.iota.domain().same_as(*at));
    }
}

TEST_CASE("names") {
  CHECK(format_pairs({}) == "{}");
  CHECK(format_pairs({{A, B}, {C, D}}) == "{A:B,C:D}");
  CHECK(mode_name(Mode::ConvexHull) == "convex");
  CHECK(move_name(MoveKind::Swell) == "swell");
}
