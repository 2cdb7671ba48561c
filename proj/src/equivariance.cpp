#include "cubefold/equivariance.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cubefold/hyperplane.hpp"

namespace cubefold {

namespace {

void check_automorphism(const Graph& g, const Permutation& p, std::size_t index) {
  const auto where = "generator " + std::to_string(index + 1);
  if (p.size() != g.order())
    fail(ErrorKind::NotAutomorphism, where + " has the wrong length");
  std::vector<char> hit(g.order(), 0);
  for (Vertex v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.order() || hit[v])
      fail(ErrorKind::NotAutomorphism, where + " is not a permutation");
    hit[v] = 1;
  }
  for (const Edge& e : g.edges())
    if (!g.adjacent(p[e.u], p[e.v]))
      fail(ErrorKind::NotAutomorphism, where + " sends edge " + g.id(e.u) + "-" + g.id(e.v) +
                                           " to non-adjacent " + g.id(p[e.u]) + ", " + g.id(p[e.v]));
}

Permutation compose_perm(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t v = 0; v < b.size(); ++v) out[v] = a[b[v]];
  return out;
}

}  // namespace

SymmetryGroup verify_group(const Graph& g, std::vector<Permutation> generators, std::size_t cap) {
  for (std::size_t i = 0; i < generators.size(); ++i) check_automorphism(g, generators[i], i);
  SymmetryGroup G;
  G.carrier = g;
  Permutation id(g.order());
  for (std::size_t v = 0; v < id.size(); ++v) id[v] = static_cast<Vertex>(v);
  std::set<Permutation> seen{id};
  G.elements.push_back(id);
  for (std::size_t head = 0; head < G.elements.size(); ++head)
    for (const auto& s : generators) {
      auto next = compose_perm(s, G.elements[head]);
      if (!seen.insert(next).second) continue;
      if (G.elements.size() >= cap)
        fail(ErrorKind::GroupTooLarge, "group exceeds " + std::to_string(cap) + " elements");
      G.elements.push_back(std::move(next));
    }
  G.generators = std::move(generators);
  return G;
}

SymmetryGroup trivial_group(const Graph& g) { return verify_group(g, {}); }

SymmetryGroup group_from_ids(const Graph& g,
                             const std::vector<std::vector<std::pair<std::string, std::string>>>& gens) {
  std::vector<Permutation> perms;
  for (const auto& moves : gens) {
    Permutation p(g.order());
    for (std::size_t v = 0; v < p.size(); ++v) p[v] = static_cast<Vertex>(v);
    std::vector<char> set(g.order(), 0);
    for (const auto& [a, b] : moves) {
      Vertex u = g.at(a);
      if (set[u]) fail(ErrorKind::ParseError, "vertex " + a + " moved twice in one generator");
      set[u] = 1;
      p[u] = g.at(b);
    }
    perms.push_back(std::move(p));
  }
  return verify_group(g, std::move(perms));
}

std::vector<HyperplaneId> hyperplane_permutation(const Graph& g, const Permutation& perm) {
  return validate(g, g, perm).hyperplane_map();
}

PairCollection orbit_of_pairs(const SymmetryGroup& group, const PairCollection& seeds) {
  const Graph& g = group.carrier;
  PairCollection out;
  std::vector<std::vector<HyperplaneId>> actions;
  for (const auto& e : group.elements) actions.push_back(hyperplane_permutation(g, e));
  for (auto [a, b] : normalize_pairs(g, seeds))
    for (const auto& h : actions) out.emplace_back(h[a], h[b]);
  return normalize_pairs(g, std::move(out));
}

bool equivariance_commutes(const PPMap& step, const SymmetryGroup& group,
                           const std::vector<Permutation>& images) {
  if (images.size() != group.generators.size()) return false;
  for (std::size_t k = 0; k < images.size(); ++k)
    for (std::size_t v = 0; v < step.domain().order(); ++v)
      if (images[k][step(Vertex(v))] != step(group.generators[k][v])) return false;
  return true;
}

namespace {

InducedAction finish(const Graph& target, std::vector<Permutation> images) {
  for (std::size_t k = 0; k < images.size(); ++k) {
    try {
      check_automorphism(target, images[k], k);
    } catch (const Error& e) {
      fail(ErrorKind::InternalError, std::string("induced action: ") + e.what());
    }
  }
  return InducedAction{target, std::move(images)};
}

}  // namespace

InducedAction induce_through_fold(const FoldResult& fr, const SymmetryGroup& group) {
  std::vector<Permutation> images;
  for (const auto& gen : group.generators) {
    auto moved = compose(fr.zeta, validate(fr.source, fr.source, gen));
    images.push_back(factor_through_fold(fr, moved).vertex_map());
  }
  return finish(fr.target, std::move(images));
}

InducedAction induce_through_swell(const SwellResult& sr, const SymmetryGroup& group) {
  std::vector<Permutation> images;
  for (const auto& gen : group.generators) {
    auto moved = compose(sr.embedding, validate(sr.source, sr.source, gen));
    images.push_back(extend_through_swell(sr, moved).vertex_map());
  }
  return finish(sr.target, std::move(images));
}

EquivariantFold equivariant_fold(const SymmetryGroup& group, HyperplanePair seed) {
  auto orbit = orbit_of_pairs(group, {seed});
  EquivariantFold out;
  out.fold = orbit.size() == 1 ? fold_pair(group.carrier, orbit[0].first, orbit[0].second)
                               : fold_collection(group.carrier, orbit);
  out.action = induce_through_fold(out.fold, group);
  return out;
}

EquivariantSwell equivariant_swell(const SymmetryGroup& group, HyperplanePair seed) {
  auto orbit = orbit_of_pairs(group, {seed});
  const auto& hs = hyperplanes(group.carrier);
  PairCollection active;
  for (auto [a, b] : orbit)
    if (!hs.transverse(a, b)) active.emplace_back(a, b);
  EquivariantSwell out;
  out.swell = active.size() == 1 ? swell_pair(group.carrier, active[0].first, active[0].second)
                                 : swell_collection(group.carrier, active);
  out.action = induce_through_swell(out.swell, group);
  return out;
}

bool is_equivariant(const PPMap& psi, const SymmetryGroup& group, const SymmetryGroup& cogroup) {
  if (group.generators.size() != cogroup.generators.size()) return false;
  for (std::size_t k = 0; k < group.generators.size(); ++k)
    for (std::size_t v = 0; v < psi.domain().order(); ++v)
      if (psi(group.generators[k][v]) != cogroup.generators[k][psi(Vertex(v))]) return false;
  return true;
}

}  // namespace cubefold
