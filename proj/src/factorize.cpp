#include "cubefold/factorize.hpp"

#include <algorithm>
#include <tuple>

#include "cubefold/median.hpp"

namespace cubefold {

std::string_view mode_name(Mode mode) {
  return mode == Mode::MedianHull ? "median" : "convex";
}

std::string_view move_name(MoveKind kind) { return kind == MoveKind::Fold ? "fold" : "swell"; }

std::string format_pairs(const PairCollection& pairs) {
  std::string s = "{";
  for (std::size_t i = 0; i < pairs.size(); ++i)
    s += (i ? "," : "") + hyperplane_label(pairs[i].first) + ":" + hyperplane_label(pairs[i].second);
  return s + "}";
}

namespace {

constexpr std::size_t kMoveCap = 10000;

class Engine {
 public:
  Engine(const PPMap& psi, const SymmetryGroup* group, const SymmetryGroup* cogroup)
      : x_(psi.domain()), eta_(identity_map(psi.domain())), psi_(psi), cogroup_(cogroup) {
    require_median(psi.domain(), "domain");
    require_median(psi.codomain(), "codomain");
    if (group) group_ = *group;
  }

  const PPMap& psi() const { return psi_; }
  const PPMap& eta() const { return eta_; }
  std::vector<Move>& moves() { return moves_; }

  void fold(HyperplanePair seed) {
    auto pairs = orbit(seed);
    Move m;
    m.kind = MoveKind::Fold;
    m.pairs = pairs;
    m.before = x_;
    FoldResult fr = pairs.size() == 1 ? fold_pair(x_, pairs[0].first, pairs[0].second)
                                      : fold_collection(x_, pairs);
    auto xi = factor_through_fold(fr, psi_);
    if (hyperplanes(fr.target).size() >= hyperplanes(x_).size())
      fail(ErrorKind::InternalError, "fold did not reduce the hyperplane count");
    if (group_) m.action = induce_through_fold(fr, *group_);
    commit(std::move(m), fr.target, fr.zeta, std::move(xi));
  }

  void swell(HyperplanePair seed) {
    auto pairs = orbit(seed);
    const auto& hs = hyperplanes(x_);
    PairCollection active;
    for (auto p : pairs)
      if (!hs.transverse(p.first, p.second)) active.push_back(p);
    Move m;
    m.kind = MoveKind::Swell;
    m.pairs = active;
    m.before = x_;
    SwellResult sr = active.size() == 1 ? swell_pair(x_, active[0].first, active[0].second)
                                        : swell_collection(x_, active);
    auto xi = extend_through_swell(sr, psi_);
    if (hyperplanes(sr.target).size() != hyperplanes(x_).size())
      fail(ErrorKind::InternalError, "swell changed the hyperplane count");
    if (group_) m.action = induce_through_swell(sr, *group_);
    commit(std::move(m), sr.target, sr.embedding, std::move(xi));
  }

  void fold_unique(HyperplaneId a, HyperplaneId b) {
    for (;;) {
      guard();
      if (psi_.hyperplane(a) != psi_.hyperplane(b))
        fail(ErrorKind::ImagesDiffer, hyperplane_label(a) + " and " + hyperplane_label(b) +
                                          " have different images");
      if (a == b) return;
      const auto& hs = hyperplanes(x_);
      const auto rel = hs.relation(a, b);
      if (rel.kind != RelationKind::Separated) {
        fold({a, b});
        return;
      }

      auto seps = separators(a, b);
      std::vector<HyperplaneId> pool = seps;
      pool.push_back(a);
      pool.push_back(b);
      std::sort(pool.begin(), pool.end());
      std::optional<std::tuple<std::int32_t, HyperplaneId, HyperplaneId>> closest;
      for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
          HyperplaneId p = pool[i], q = pool[j];
          if (std::minmax(p, q) == std::minmax(a, b)) continue;
          if (psi_.hyperplane(p) != psi_.hyperplane(q)) continue;
          std::tuple<std::int32_t, HyperplaneId, HyperplaneId> key{
              hs.relation(p, q).separation_distance, p, q};
          if (!closest || key < *closest) closest = key;
        }
      if (closest) {
        const std::size_t start = moves_.size();
        fold_unique(std::get<1>(*closest), std::get<2>(*closest));
        for (std::size_t k = start; k < moves_.size(); ++k) {
          a = moves_[k].step_map.hyperplane(a);
          b = moves_[k].step_map.hyperplane(b);
        }
        continue;
      }

      std::optional<HyperplaneId> h1;
      for (HyperplaneId l : seps)
        if (hs.relation(a, l).kind == RelationKind::Tangent) {
          h1 = l;
          break;
        }
      if (!h1)
        fail(ErrorKind::InternalError, "no separator of " + hyperplane_label(a) + ", " +
                                           hyperplane_label(b) + " is tangent to " +
                                           hyperplane_label(a));
      const auto before = rel.separation_distance;
      swell({a, *h1});
      const auto& step = moves_.back().step_map;
      a = step.hyperplane(a);
      b = step.hyperplane(b);
      const auto after = hyperplanes(x_).relation(a, b);
      if (after.kind == RelationKind::Separated && after.separation_distance >= before)
        fail(ErrorKind::InternalError, "swell did not bring the pair closer");
    }
  }

  void check_result(const PPMap& original) {
    auto replay = compose(psi_, eta_);
    if (replay.vertex_map() != original.vertex_map())
      fail(ErrorKind::InternalError, "factorization does not reproduce the map");
    if (group_ && cogroup_) {
      if (!is_equivariant(psi_, *group_, *cogroup_))
        fail(ErrorKind::InternalError, "terminal map is not equivariant");
    }
  }

 private:
  PairCollection orbit(HyperplanePair seed) {
    if (group_) return orbit_of_pairs(*group_, {seed});
    return normalize_pairs(x_, {seed});
  }

  std::vector<HyperplaneId> separators(HyperplaneId a, HyperplaneId b) const {
    const auto& hs = hyperplanes(x_);
    std::vector<HyperplaneId> out;
    auto side_of = [&](HyperplaneId l, HyperplaneId j) {
      const auto& side = hs.sides(l);
      int w = -1;
      for (Vertex v : hs[j].carrier) {
        int s = side[v];
        if (w < 0) w = s;
        else if (w != s) return 2;
      }
      return w;
    };
    for (const auto& h : hs) {
      if (h.id == a || h.id == b) continue;
      int sa = side_of(h.id, a), sb = side_of(h.id, b);
      if (sa < 2 && sb < 2 && sa != sb) out.push_back(h.id);
    }
    return out;
  }

  void commit(Move m, const Graph& after, const PPMap& step, PPMap xi) {
    if (m.action) {
      if (!equivariance_commutes(step, *group_, m.action->generator_images))
        fail(ErrorKind::InternalError, "equivariance square does not commute");
      group_ = verify_group(after, m.action->generator_images);
    }
    m.after = after;
    m.step_map = step;
    eta_ = compose(step, eta_);
    psi_ = std::move(xi);
    x_ = after;
    moves_.push_back(std::move(m));
  }

  void guard() {
    if (moves_.size() > kMoveCap) fail(ErrorKind::InternalError, "move limit exceeded");
  }

 private:
  Graph x_;
  PPMap eta_;
  PPMap psi_;
  std::optional<SymmetryGroup> group_;
  const SymmetryGroup* cogroup_ = nullptr;
  std::vector<Move> moves_;
};

FactorizationTrace run(const PPMap& psi, Mode mode, const SymmetryGroup* group,
                       const SymmetryGroup* cogroup) {
  Engine engine(psi, group, cogroup);
  for (;;) {
    auto v = mode == Mode::MedianHull ? find_merged(engine.psi()) : find_violation(engine.psi());
    if (!v) break;
    if (v->kind == ViolationKind::Merged) {
      engine.fold_unique(v->pair.first, v->pair.second);
      continue;
    }
    const auto& hs = hyperplanes(engine.psi().domain());
    if (hs.relation(v->pair.first, v->pair.second).kind != RelationKind::Tangent)
      fail(ErrorKind::InternalError, "transversality violation without a tangent pair");
    engine.swell(v->pair);
  }
  engine.check_result(psi);
  FactorizationTrace t;
  t.moves = std::move(engine.moves());
  t.eta = engine.eta();
  t.iota = engine.psi();
  t.mode = mode;
  return t;
}

}  // namespace

PartialFactorization fold_unique_pair(const PPMap& psi, HyperplaneId a, HyperplaneId b) {
  const auto& hs = hyperplanes(psi.domain());
  hs.check(a);
  hs.check(b);
  if (a == b) fail(ErrorKind::ImagesDiffer, "pair must consist of two distinct hyperplanes");
  if (psi.hyperplane(a) != psi.hyperplane(b))
    fail(ErrorKind::ImagesDiffer, hyperplane_label(a) + " and " + hyperplane_label(b) +
                                      " have different images");
  Engine engine(psi, nullptr, nullptr);
  engine.fold_unique(a, b);
  engine.check_result(psi);
  return PartialFactorization{std::move(engine.moves()), engine.eta(), engine.psi()};
}

FactorizationTrace factorize(const PPMap& psi, Mode mode) { return run(psi, mode, nullptr, nullptr); }

FactorizationTrace factorize_equivariant(const PPMap& psi, const SymmetryGroup& group,
                                         const SymmetryGroup& cogroup, Mode mode) {
  if (!group.carrier.same_as(psi.domain()) || !cogroup.carrier.same_as(psi.codomain()))
    fail(ErrorKind::NotEquivariant, "groups do not act on the map's domain and codomain");
  if (!is_equivariant(psi, group, cogroup))
    fail(ErrorKind::NotEquivariant, "map does not intertwine the generators");
  return run(psi, mode, &group, &cogroup);
}

}  // namespace cubefold
