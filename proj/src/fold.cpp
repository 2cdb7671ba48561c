#include "cubefold/fold.hpp"

#include <algorithm>
#include <numeric>

#include "cubefold/median.hpp"

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

void require_contact(const Graph& g, HyperplaneId a, HyperplaneId b) {
  const auto& r = hyperplanes(g).relation(a, b);
  if (r.kind == RelationKind::Separated)
    fail(ErrorKind::NotInContact, "separation distance " + std::to_string(r.separation_distance));
}

std::string pair_label(const PairCollection& pairs) {
  std::string s;
  for (const auto& [a, b] : pairs)
    s += (s.empty() ? "" : ",") + hyperplane_label(a) + ":" + hyperplane_label(b);
  return s;
}

}  // namespace

PairCollection normalize_pairs(const Graph& g, PairCollection pairs) {
  const auto& hs = hyperplanes(g);
  PairCollection out;
  for (auto [a, b] : pairs) {
    hs.check(a);
    hs.check(b);
    if (a == b) continue;
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<HyperplaneId>> connected_classes(std::size_t k, const PairCollection& pairs) {
  UnionFind uf(k);
  for (auto [a, b] : pairs) uf.unite(a, b);
  std::vector<std::vector<HyperplaneId>> out;
  std::vector<std::int32_t> slot(k, -1);
  for (std::size_t j = 0; j < k; ++j) {
    auto r = uf.find(static_cast<std::int32_t>(j));
    if (slot[r] < 0) {
      slot[r] = static_cast<std::int32_t>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(static_cast<HyperplaneId>(j));
  }
  return out;
}

FirstFold first_fold(const Graph& g, HyperplaneId a, HyperplaneId b) {
  require_median(g, "first_fold");
  const auto& hs = hyperplanes(g);
  hs.check(a);
  hs.check(b);
  const std::size_t n = g.order();
  UnionFind uf(n);
  if (a != b) {
    require_contact(g, a, b);
    auto alpha = canonical_involution(g, a);
    auto beta = canonical_involution(g, b);
    for (std::size_t p = 0; p < n; ++p)
      if (alpha[p] >= 0 && beta[p] >= 0) uf.unite(alpha[p], beta[p]);
  }

  std::vector<std::vector<std::string>> members(n);
  for (std::size_t v = 0; v < n; ++v) members[uf.find(Vertex(v))].push_back(g.id(Vertex(v)));
  std::vector<std::string> names(n), ids;
  for (std::size_t r = 0; r < n; ++r) {
    if (members[r].empty()) continue;
    std::sort(members[r].begin(), members[r].end());
    for (const auto& id : members[r]) names[r] += (names[r].empty() ? "" : "|") + id;
    ids.push_back(names[r]);
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Edge& e : g.edges()) {
    auto ru = uf.find(e.u), rv = uf.find(e.v);
    if (ru == rv)
      fail(ErrorKind::InternalError, "first fold collapsed edge " + g.id(e.u) + "-" + g.id(e.v));
    edges.emplace_back(names[ru], names[rv]);
  }
  FirstFold out;
  out.graph = build_graph(std::move(ids), edges,
                          g.name() + "/" + hyperplane_label(a) + ":" + hyperplane_label(b));
  out.pi.resize(n);
  for (std::size_t v = 0; v < n; ++v) out.pi[v] = out.graph.at(names[uf.find(Vertex(v))]);
  return out;
}

FoldResult fold_pair(const Graph& g, HyperplaneId a, HyperplaneId b) {
  auto ff = first_fold(g, a, b);
  FoldResult fr;
  fr.source = g;
  fr.pairs = normalize_pairs(g, {{a, b}});
  fr.merged_classes = connected_classes(hyperplanes(g).size(), fr.pairs);
  fr.cubulation = cubulate(walls_from_hyperplanes(ff.graph));
  std::vector<Vertex> f(g.order());
  for (std::size_t v = 0; v < f.size(); ++v) f[v] = fr.cubulation.eta[ff.pi[v]];
  fr.target = fr.cubulation.graph.renamed("fold(" + g.name() + ";" + pair_label(fr.pairs) + ")");
  fr.zeta = validate(g, fr.target, std::move(f));
  fr.quotient = std::move(ff.graph);
  fr.pi = std::move(ff.pi);
  return fr;
}

Wallspace parity_wallspace(const Graph& g, const std::vector<std::vector<HyperplaneId>>& classes) {
  const auto& hs = hyperplanes(g);
  kernels::SideTable side;
  std::vector<std::string> names;
  for (const auto& cls : classes) {
    std::vector<char> s(g.order(), 1);
    std::string name;
    for (HyperplaneId j : cls) {
      const auto& sj = hs.sides(j);
      for (std::size_t v = 0; v < s.size(); ++v)
        if (!sj[v]) s[v] ^= 1;
      name += (name.empty() ? "" : "+") + hyperplane_label(j);
    }
    side.push_back(std::move(s));
    names.push_back(std::move(name));
  }
  return make_wallspace(g, std::move(side), std::move(names));
}

FoldResult fold_collection(const Graph& g, PairCollection pairs) {
  require_median(g, "fold_collection");
  FoldResult fr;
  fr.source = g;
  fr.pairs = normalize_pairs(g, std::move(pairs));
  for (auto [a, b] : fr.pairs) require_contact(g, a, b);
  fr.merged_classes = connected_classes(hyperplanes(g).size(), fr.pairs);
  fr.cubulation = cubulate(parity_wallspace(g, fr.merged_classes));
  fr.target = fr.cubulation.graph.renamed("fold(" + g.name() + ";" + pair_label(fr.pairs) + ")");
  fr.zeta = validate(g, fr.target, fr.cubulation.eta);
  fr.quotient = g;
  fr.pi.resize(g.order());
  std::iota(fr.pi.begin(), fr.pi.end(), 0);
  return fr;
}

PPMap factor_through_fold(const FoldResult& fr, const PPMap& psi, bool reverse) {
  if (!psi.domain().same_as(fr.source))
    fail(ErrorKind::DomainMismatch, "map domain is not the folded graph");
  for (auto [a, b] : fr.pairs)
    if (psi.hyperplane(a) != psi.hyperplane(b))
      fail(ErrorKind::NotFactorizable, "hyperplanes " + hyperplane_label(a) + " and " +
                                           hyperplane_label(b) + " have different images");

  // push through the quotient first
  std::vector<Vertex> down(fr.quotient.order(), -1);
  for (std::size_t v = 0; v < fr.pi.size(); ++v) {
    Vertex& slot = down[fr.pi[v]];
    Vertex target = psi(Vertex(v));
    if (slot >= 0 && slot != target)
      fail(ErrorKind::NotFactorizable, "map is not constant on " + fr.quotient.id(fr.pi[v]));
    slot = target;
  }
  auto report = check_map(fr.quotient, psi.codomain(), down);
  if (!report.ok)
    fail(ErrorKind::NotFactorizable, "map does not descend to the first fold: " + report.message);
  auto through = universal_map_through_cubulation(validate(fr.quotient, psi.codomain(), down),
                                                  fr.cubulation, reverse);
  // the cubulation graph and the target differ only by name
  auto xi = validate(fr.target, psi.codomain(), through.vertex_map());
  for (std::size_t v = 0; v < fr.source.order(); ++v)
    if (xi(fr.zeta(Vertex(v))) != psi(Vertex(v)))
      fail(ErrorKind::InternalError, "factorization does not reproduce the map");
  return xi;
}

}  // namespace cubefold
