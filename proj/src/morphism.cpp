#include "cubefold/morphism.hpp"

#include <algorithm>

#include "cubefold/median.hpp"

namespace cubefold {

VertexSet PPMap::image() const {
  VertexSet out = vmap_;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

MapReport failure(ErrorKind kind, std::string message) {
  MapReport r;
  r.ok = false;
  r.error = kind;
  r.message = std::move(message);
  return r;
}

std::optional<FourCycle> bad_square(const Graph& dom, const Graph& cod,
                                    const std::vector<Vertex>& f) {
  for (const auto& c : four_cycles(dom)) {
    Vertex a = f[c[0]], b = f[c[1]], x = f[c[2]], d = f[c[3]];
    bool edge = a == x && b == d && cod.adjacent(a, b);
    bool square = a != x && b != d && cod.adjacent(a, b) && cod.adjacent(b, x) &&
                  cod.adjacent(x, d) && cod.adjacent(d, a);
    if (!edge && !square) return c;
  }
  return std::nullopt;
}

}  // namespace

MapReport check_map(const Graph& dom, const Graph& cod, const std::vector<Vertex>& f) {
  if (f.size() != dom.order())
    return failure(ErrorKind::UnknownVertex, "vertex map covers " + std::to_string(f.size()) +
                                                 " of " + std::to_string(dom.order()) +
                                                 " domain vertices");
  for (std::size_t v = 0; v < f.size(); ++v)
    if (f[v] < 0 || static_cast<std::size_t>(f[v]) >= cod.order())
      return failure(ErrorKind::UnknownVertex,
                     "image of " + dom.id(Vertex(v)) + " is not a codomain vertex");
  for (const Edge& e : dom.edges()) {
    if (f[e.u] == f[e.v])
      return failure(ErrorKind::EdgeCollapsed, "edge " + dom.id(e.u) + "-" + dom.id(e.v) +
                                                   " collapses onto " + cod.id(f[e.u]));
    if (!cod.adjacent(f[e.u], f[e.v]))
      return failure(ErrorKind::NotAnEdge, "edge " + dom.id(e.u) + "-" + dom.id(e.v) +
                                               " lands on non-adjacent " + cod.id(f[e.u]) + ", " +
                                               cod.id(f[e.v]));
  }
  const auto& hd = hyperplanes(dom);
  const auto& hc = hyperplanes(cod);
  const auto edges = dom.edges();
  for (const auto& h : hd) {
    HyperplaneId image = -1;
    EdgeId first = -1;
    for (EdgeId e : h.edges) {
      auto k = hc.class_of(cod, f[edges[e].u], f[edges[e].v]);
      if (image < 0) {
        image = k;
        first = e;
      } else if (k != image) {
        auto r = failure(ErrorKind::ParallelBroken,
                         "parallel edges " + dom.id(edges[first].u) + "-" + dom.id(edges[first].v) +
                             " and " + dom.id(edges[e].u) + "-" + dom.id(edges[e].v) +
                             " land in hyperplanes " + hyperplane_label(image) + " and " +
                             hyperplane_label(k));
        r.split_classes = std::minmax(image, k);
        r.bad_square = bad_square(dom, cod, f);
        return r;
      }
    }
  }
  return MapReport{};
}

PPMap validate(const Graph& dom, const Graph& cod, std::vector<Vertex> f) {
  auto report = check_map(dom, cod, f);
  if (!report.ok) fail(report.error, report.message);
  PPMap psi;
  psi.domain_ = dom;
  psi.codomain_ = cod;
  const auto& hd = hyperplanes(dom);
  const auto& hc = hyperplanes(cod);
  const auto edges = dom.edges();
  psi.hmap_.resize(hd.size());
  for (const auto& h : hd) {
    const Edge& e = edges[h.edges.front()];
    psi.hmap_[h.id] = hc.class_of(cod, f[e.u], f[e.v]);
  }
  psi.vmap_ = std::move(f);
  return psi;
}

PPMap map_from_ids(const Graph& dom, const Graph& cod,
                   const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<Vertex> f(dom.order(), -1);
  for (const auto& [a, b] : pairs) {
    Vertex u = dom.at(a);
    if (f[u] >= 0) fail(ErrorKind::ParseError, "vertex " + a + " mapped twice");
    f[u] = cod.at(b);
  }
  for (std::size_t v = 0; v < f.size(); ++v)
    if (f[v] < 0) fail(ErrorKind::ParseError, "vertex " + dom.id(Vertex(v)) + " has no image");
  return validate(dom, cod, std::move(f));
}

PPMap identity_map(const Graph& g) {
  std::vector<Vertex> f(g.order());
  for (std::size_t v = 0; v < f.size(); ++v) f[v] = static_cast<Vertex>(v);
  return validate(g, g, std::move(f));
}

std::string_view map_kind_name(MapKind kind) {
  switch (kind) {
    case MapKind::NotParallelPreserving: return "not-parallel-preserving";
    case MapKind::ParallelPreserving: return "parallel-preserving";
    case MapKind::IsometricEmbedding: return "isometric-embedding";
    case MapKind::ConvexEmbedding: return "convex-embedding";
    case MapKind::Isometry: return "isometry";
  }
  return "?";
}

MapClass classify(const PPMap& psi) {
  require_median(psi.domain(), "domain");
  require_median(psi.codomain(), "codomain");
  const auto& hd = hyperplanes(psi.domain());
  const auto& hc = hyperplanes(psi.codomain());
  const auto k = static_cast<HyperplaneId>(hd.size());
  MapClass out;
  for (HyperplaneId a = 0; a < k; ++a)
    for (HyperplaneId b = a + 1; b < k; ++b)
      if (psi.hyperplane(a) == psi.hyperplane(b)) {
        out.kind = MapKind::ParallelPreserving;
        out.witness = HyperplanePair{a, b};
        out.detail = "distinct hyperplanes share an image";
        return out;
      }
  for (HyperplaneId a = 0; a < k; ++a)
    for (HyperplaneId b = a + 1; b < k; ++b)
      if (!hd.transverse(a, b) && hc.transverse(psi.hyperplane(a), psi.hyperplane(b))) {
        out.kind = MapKind::IsometricEmbedding;
        out.witness = HyperplanePair{a, b};
        out.detail = std::string(relation_name(hd.relation(a, b).kind)) +
                     " hyperplanes with transverse images";
        return out;
      }
  out.kind = hd.size() == hc.size() ? MapKind::Isometry : MapKind::ConvexEmbedding;
  return out;
}

MapClass classify(const Graph& dom, const Graph& cod, const std::vector<Vertex>& f) {
  auto report = check_map(dom, cod, f);
  if (report.ok) return classify(validate(dom, cod, f));
  MapClass out;
  out.kind = MapKind::NotParallelPreserving;
  out.witness = report.split_classes;
  out.detail = std::string(error_name(report.error)) + ": " + report.message;
  return out;
}

PPMap compose(const PPMap& psi, const PPMap& phi) {
  if (!phi.codomain().same_as(psi.domain()))
    fail(ErrorKind::DomainMismatch, "cannot compose: codomain " + phi.codomain().name() +
                                        " differs from domain " + psi.domain().name());
  std::vector<Vertex> f(phi.domain().order());
  for (std::size_t v = 0; v < f.size(); ++v) f[v] = psi(phi(static_cast<Vertex>(v)));
  return validate(phi.domain(), psi.codomain(), std::move(f));
}

std::optional<Violation> find_merged(const PPMap& psi) {
  require_median(psi.domain(), "domain");
  require_median(psi.codomain(), "codomain");
  const auto& hd = hyperplanes(psi.domain());
  const auto k = static_cast<HyperplaneId>(hd.size());
  std::optional<Violation> best;
  for (HyperplaneId a = 0; a < k; ++a)
    for (HyperplaneId b = a + 1; b < k; ++b) {
      if (psi.hyperplane(a) != psi.hyperplane(b)) continue;
      Violation v{{a, b}, ViolationKind::Merged, hd.relation(a, b).separation_distance};
      if (!best || v.separation < best->separation) best = v;
    }
  return best;
}

std::optional<Violation> find_violation(const PPMap& psi) {
  if (auto merged = find_merged(psi)) return merged;
  const auto& hd = hyperplanes(psi.domain());
  const auto& hc = hyperplanes(psi.codomain());
  const auto k = static_cast<HyperplaneId>(hd.size());
  std::optional<Violation> separated;
  for (HyperplaneId a = 0; a < k; ++a)
    for (HyperplaneId b = a + 1; b < k; ++b) {
      if (hd.transverse(a, b) || !hc.transverse(psi.hyperplane(a), psi.hyperplane(b))) continue;
      const auto& r = hd.relation(a, b);
      if (r.kind == RelationKind::Tangent) return Violation{{a, b}, ViolationKind::Transversalized, 0};
      if (!separated) separated = Violation{{a, b}, ViolationKind::Transversalized, r.separation_distance};
    }
  return separated;
}

bool is_chiasmatic(const PPMap& psi) {
  const auto& hd = hyperplanes(psi.domain());
  const auto& hc = hyperplanes(psi.codomain());
  const auto k = static_cast<HyperplaneId>(hd.size());
  for (HyperplaneId a = 0; a < k; ++a)
    for (HyperplaneId b = a + 1; b < k; ++b)
      if (hd.transverse(a, b) && !hc.transverse(psi.hyperplane(a), psi.hyperplane(b)))
        return false;
  return true;
}

bool same_map(const PPMap& a, const PPMap& b) {
  return a.domain().same_as(b.domain()) && a.codomain().same_as(b.codomain()) &&
         a.vertex_map() == b.vertex_map();
}

}  // namespace cubefold
