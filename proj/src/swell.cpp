#include "cubefold/swell.hpp"

#include <algorithm>

#include "cubefold/median.hpp"

namespace cubefold {

namespace {

std::string pair_label(const PairCollection& pairs) {
  std::string s;
  for (const auto& [a, b] : pairs)
    s += (s.empty() ? "" : ",") + hyperplane_label(a) + ":" + hyperplane_label(b);
  return s;
}

}  // namespace

SwellResult swell_pair(const Graph& g, HyperplaneId a, HyperplaneId b) {
  require_median(g, "swell_pair");
  const auto& hs = hyperplanes(g);
  hs.check(a);
  hs.check(b);
  if (a > b) std::swap(a, b);
  const auto& r = hs.relation(a, b);
  if (r.kind != RelationKind::Tangent)
    fail(ErrorKind::NotTangent, hyperplane_label(a) + " and " + hyperplane_label(b) + " are " +
                                    std::string(relation_name(r.kind)));
  auto alpha = canonical_involution(g, a);
  auto beta = canonical_involution(g, b);

  std::vector<std::string> ids(g.ids().begin(), g.ids().end());
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(g.id(e.u), g.id(e.v));

  const auto tag = ";" + hyperplane_label(a) + "," + hyperplane_label(b) + ")";
  std::vector<std::string> gamma(g.order());
  std::vector<std::string> taken = ids;
  std::sort(taken.begin(), taken.end());
  for (std::size_t p = 0; p < g.order(); ++p) {
    if (alpha[p] < 0 || beta[p] < 0) continue;
    gamma[p] = unique_name("γ(" + g.id(Vertex(p)) + tag, taken);
    taken.insert(std::upper_bound(taken.begin(), taken.end(), gamma[p]), gamma[p]);
    ids.push_back(gamma[p]);
    edges.emplace_back(gamma[p], g.id(alpha[p]));
    edges.emplace_back(gamma[p], g.id(beta[p]));
  }
  for (const Edge& e : g.edges())
    if (!gamma[e.u].empty() && !gamma[e.v].empty()) edges.emplace_back(gamma[e.u], gamma[e.v]);

  SwellResult sr;
  sr.source = g;
  sr.target = build_graph(std::move(ids), edges, "swell(" + g.name() + ";" + pair_label({{a, b}}) + ")");
  std::vector<Vertex> f(g.order());
  for (std::size_t v = 0; v < f.size(); ++v) f[v] = sr.target.at(g.id(Vertex(v)));
  sr.embedding = validate(g, sr.target, std::move(f));
  sr.new_transversal_pairs = {{a, b}};
  return sr;
}

Exemptions spot_exemptions(const Graph& g, const PairCollection& pairs) {
  const std::size_t k = hyperplanes(g).size();
  Exemptions ex(k * k, 0);
  for (auto [a, b] : pairs) ex[a * k + b] = ex[b * k + a] = 1;
  return ex;
}

SwellResult swell_collection(const Graph& g, PairCollection pairs) {
  require_median(g, "swell_collection");
  const auto& hs = hyperplanes(g);
  pairs = normalize_pairs(g, std::move(pairs));
  PairCollection active;
  for (auto [a, b] : pairs)
    if (!hs.transverse(a, b)) active.emplace_back(a, b);

  auto cub = cubulate(walls_from_hyperplanes(g), spot_exemptions(g, active));
  SwellResult sr;
  sr.source = g;
  sr.target = cub.graph.renamed("swell(" + g.name() + ";" + pair_label(active) + ")");
  sr.embedding = validate(g, sr.target, cub.eta);
  sr.new_transversal_pairs = active;

  const auto& ht = hyperplanes(sr.target);
  for (auto [a, b] : active)
    if (!ht.transverse(sr.embedding.hyperplane(a), sr.embedding.hyperplane(b))) {
      const auto& r = hs.relation(a, b);
      fail(ErrorKind::NotTangent, hyperplane_label(a) + " and " + hyperplane_label(b) +
                                      " are separated (distance " +
                                      std::to_string(r.separation_distance) + ")");
    }
  return sr;
}

PPMap extend_through_swell(const SwellResult& sr, const PPMap& psi, bool reverse) {
  if (!psi.domain().same_as(sr.source))
    fail(ErrorKind::DomainMismatch, "map domain is not the swelled graph");
  const auto& hy = hyperplanes(psi.codomain());
  for (auto [a, b] : sr.new_transversal_pairs)
    if (!hy.transverse(psi.hyperplane(a), psi.hyperplane(b)))
      fail(ErrorKind::NotFactorizable, "images of " + hyperplane_label(a) + " and " +
                                           hyperplane_label(b) + " are not transverse");
  std::vector<Vertex> f(sr.target.order(), -1);
  for (std::size_t v = 0; v < sr.source.order(); ++v) f[sr.embedding(Vertex(v))] = psi(Vertex(v));
  f = complete_map(sr.target, psi.codomain(), std::move(f), ErrorKind::MissingFourthCorner, reverse);
  auto report = check_map(sr.target, psi.codomain(), f);
  if (!report.ok)
    fail(ErrorKind::NotFactorizable, "extension is not parallel-preserving: " + report.message);
  return validate(sr.target, psi.codomain(), std::move(f));
}

}  // namespace cubefold
