#include "cubefold/cubulation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "cubefold/hyperplane.hpp"

namespace cubefold {

Wallspace make_wallspace(Graph carrier, kernels::SideTable side, std::vector<std::string> names) {
  Wallspace w;
  const std::size_t n = carrier.order();
  for (std::size_t i = 0; i < side.size(); ++i) {
    if (side[i].size() != n)
      fail(ErrorKind::InternalError, "wall " + std::to_string(i) + " has the wrong length");
    Wall wall;
    wall.id = static_cast<std::int32_t>(i);
    for (std::size_t v = 0; v < n; ++v) (side[i][v] ? wall.plus : wall.minus).push_back(Vertex(v));
    if (wall.plus.empty() || wall.minus.empty())
      fail(ErrorKind::InternalError, "wall " + std::to_string(i) + " has an empty side");
    w.walls.push_back(std::move(wall));
  }
  if (names.empty())
    for (std::size_t i = 0; i < side.size(); ++i) names.push_back(hyperplane_label(HyperplaneId(i)));
  w.carrier = std::move(carrier);
  w.side = std::move(side);
  w.names = std::move(names);
  return w;
}

Wallspace walls_from_hyperplanes(const Graph& g) {
  const auto& hs = hyperplanes(g);
  kernels::SideTable side;
  for (const auto& h : hs) side.push_back(hs.sides(h.id));
  return make_wallspace(g, std::move(side));
}

std::string orientation_bits(const Orientation& o) {
  std::string s;
  for (bool b : o) s.push_back(b ? '1' : '0');
  return s;
}

Orientation principal_orientation(const Wallspace& w, Vertex x) {
  w.carrier.check_vertex(x);
  Orientation o(w.walls.size());
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = w.side[i][x] != 0;
  return o;
}

namespace {

struct Checker {
  std::size_t walls;
  std::vector<std::uint8_t> occ;
  Exemptions exempt;

  Checker(const Wallspace& w, const Exemptions& ex)
      : walls(w.walls.size()), occ(kernels::pair_occupancy(w.side)), exempt(ex) {
    if (exempt.empty()) exempt.assign(walls * walls, 0);
  }

  bool meets(std::size_t i, bool a, std::size_t j, bool b) const {
    return (occ[i * walls + j] >> (2 * unsigned(a) + unsigned(b))) & 1u;
  }

  bool flip_ok(const Orientation& o, std::size_t i) const {
    bool a = !o[i];
    for (std::size_t j = 0; j < walls; ++j) {
      if (j == i || exempt[i * walls + j]) continue;
      if (!meets(i, a, j, o[j])) return false;
    }
    return true;
  }

  bool ok(const Orientation& o) const {
    for (std::size_t i = 0; i < walls; ++i)
      for (std::size_t j = i; j < walls; ++j) {
        if (exempt[i * walls + j]) continue;
        if (!meets(i, o[i], j, o[j])) return false;
      }
    return true;
  }
};

}  // namespace

bool is_consistent(const Wallspace& w, const Orientation& o, const Exemptions& exempt) {
  return Checker(w, exempt).ok(o);
}

std::vector<Orientation> consistent_orientations(const Wallspace& w, const Exemptions& exempt) {
  Checker check(w, exempt);
  std::unordered_map<Orientation, std::size_t> seen;
  std::vector<Orientation> out{principal_orientation(w, 0)};
  seen.emplace(out.front(), 0);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (std::size_t i = 0; i < check.walls; ++i) {
      if (!check.flip_ok(out[head], i)) continue;
      Orientation next = out[head];
      next[i] = !next[i];
      if (seen.emplace(next, out.size()).second) out.push_back(std::move(next));
    }
  }
  return out;
}

std::vector<Orientation> consistent_orientations_brute(const Wallspace& w, const Exemptions& exempt,
                                                       bool parallel) {
  const std::size_t walls = w.walls.size();
  if (walls > 24) fail(ErrorKind::InternalError, "brute-force filter limited to 24 walls");
  Exemptions ex = exempt.empty() ? Exemptions(walls * walls, 0) : exempt;
  auto occ = parallel ? kernels::pair_occupancy(w.side) : kernels::pair_occupancy_serial(w.side);
  auto masks = parallel ? kernels::consistent_masks(walls, occ, ex)
                        : kernels::consistent_masks_serial(walls, occ, ex);
  std::vector<Orientation> out;
  for (auto m : masks) {
    Orientation o(walls);
    for (std::size_t i = 0; i < walls; ++i) o[i] = (m >> i) & 1u;
    out.push_back(std::move(o));
  }
  return out;
}

std::string unique_name(std::string name, const std::vector<std::string>& taken) {
  while (std::binary_search(taken.begin(), taken.end(), name)) name += '\'';
  return name;
}

Cubulation cubulate(const Wallspace& w, const Exemptions& exempt) {
  const Graph& g = w.carrier;
  auto orientations = consistent_orientations(w, exempt);
  std::unordered_map<Orientation, std::size_t> index;
  for (std::size_t i = 0; i < orientations.size(); ++i) index.emplace(orientations[i], i);

  std::vector<std::vector<std::string>> preimages(orientations.size());
  std::vector<std::size_t> eta_index(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    auto it = index.find(principal_orientation(w, Vertex(v)));
    if (it == index.end())
      fail(ErrorKind::InternalError, "principal orientation of " + g.id(Vertex(v)) + " missing");
    eta_index[v] = it->second;
    preimages[it->second].push_back(g.id(Vertex(v)));
  }

  std::vector<std::string> principal_names;
  std::vector<std::string> names(orientations.size());
  for (std::size_t i = 0; i < orientations.size(); ++i) {
    if (preimages[i].empty()) continue;
    std::sort(preimages[i].begin(), preimages[i].end());
    std::string joined;
    for (const auto& id : preimages[i]) joined += (joined.empty() ? "" : "|") + id;
    names[i] = joined;
    principal_names.push_back(joined);
  }
  std::sort(principal_names.begin(), principal_names.end());
  for (std::size_t i = 0; i < orientations.size(); ++i)
    if (names[i].empty()) names[i] = unique_name("o:" + orientation_bits(orientations[i]), principal_names);

  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < orientations.size(); ++i)
    for (std::size_t k = 0; k < w.walls.size(); ++k) {
      Orientation next = orientations[i];
      next[k] = !next[k];
      auto it = index.find(next);
      if (it != index.end() && it->second > i) edges.emplace_back(names[i], names[it->second]);
    }

  Cubulation c;
  c.source = g;
  c.graph = build_graph(names, edges, "M(" + g.name() + ")");
  c.orientations.resize(orientations.size());
  std::vector<Vertex> at(orientations.size());
  for (std::size_t i = 0; i < orientations.size(); ++i) {
    at[i] = c.graph.at(names[i]);
    c.orientations[at[i]] = orientations[i];
  }
  c.eta.resize(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) c.eta[v] = at[eta_index[v]];
  for (const Edge& e : c.graph.edges()) {
    const auto& a = c.orientations[e.u];
    const auto& b = c.orientations[e.v];
    std::int32_t wall = -1;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] != b[k]) wall = static_cast<std::int32_t>(k);
    c.edge_wall.push_back(wall);
  }
  return c;
}

PPMap eta_map(const Cubulation& c) { return validate(c.source, c.graph, c.eta); }

namespace {

// Image of p for the square c-a-p-b given images of c, a, b.
std::optional<Vertex> fourth_corner(const Graph& y, Vertex c, Vertex a, Vertex b, bool& ambiguous) {
  ambiguous = false;
  if (a == b) return c;
  std::optional<Vertex> found;
  for (Vertex w : y.neighbors(a)) {
    if (w == c || !y.adjacent(w, b)) continue;
    if (found) {
      ambiguous = true;
      return std::nullopt;
    }
    found = w;
  }
  return found;
}

}  // namespace

std::vector<Vertex> complete_map(const Graph& dom, const Graph& cod, std::vector<Vertex> f,
                                 ErrorKind on_fail, bool reverse) {
  const auto n = static_cast<Vertex>(dom.order());
  std::vector<Vertex> order(dom.order());
  for (Vertex v = 0; v < n; ++v) order[v] = reverse ? n - 1 - v : v;
  const auto& hd = hyperplanes(dom);
  const auto& hc = hyperplanes(cod);

  auto missing = [&] {
    return std::count(f.begin(), f.end(), -1);
  };

  while (missing() > 0) {
    bool progress = false;
    for (Vertex p : order) {
      if (f[p] >= 0) continue;
      std::vector<Vertex> mapped;
      for (Vertex q : dom.neighbors(p))
        if (f[q] >= 0) mapped.push_back(q);
      std::optional<Vertex> value;
      for (std::size_t i = 0; i < mapped.size(); ++i)
        for (std::size_t j = i + 1; j < mapped.size(); ++j) {
          Vertex a = mapped[i], b = mapped[j];
          for (Vertex c : dom.neighbors(a)) {
            if (c == p || f[c] < 0 || !dom.adjacent(c, b)) continue;
            if (f[c] == f[a] || f[c] == f[b] || !cod.adjacent(f[c], f[a]) ||
                !cod.adjacent(f[c], f[b]))
              fail(on_fail, "square at " + dom.id(c) + " is not sent to a square or an edge");
            bool ambiguous = false;
            auto forced = fourth_corner(cod, f[c], f[a], f[b], ambiguous);
            if (!forced)
              fail(on_fail, "no " + std::string(ambiguous ? "unique " : "") + "fourth corner for " +
                                dom.id(p) + " opposite " + dom.id(c));
            if (value && *value != *forced)
              fail(on_fail, "corners disagree on the image of " + dom.id(p));
            value = forced;
          }
        }
      if (value) {
        f[p] = *value;
        progress = true;
      }
    }
    if (progress) continue;

    // no corner available: cross an edge whose class already has an image
    std::vector<HyperplaneId> image(hd.size(), -1);
    for (const Edge& e : dom.edges())
      if (f[e.u] >= 0 && f[e.v] >= 0 && cod.adjacent(f[e.u], f[e.v]))
        image[hd.class_of(*dom.edge_between(e.u, e.v))] = hc.class_of(cod, f[e.u], f[e.v]);
    for (Vertex p : order) {
      if (f[p] >= 0) continue;
      for (Vertex q : dom.neighbors(p)) {
        if (f[q] < 0) continue;
        auto k = image[hd.class_of(*dom.edge_between(p, q))];
        if (k < 0) continue;
        for (Vertex y : cod.neighbors(f[q]))
          if (hc.class_of(cod, f[q], y) == k) {
            f[p] = y;
            break;
          }
        if (f[p] < 0)
          fail(on_fail, "no edge of hyperplane " + hyperplane_label(k) + " at " + cod.id(f[q]));
        progress = true;
        break;
      }
      if (progress) break;
    }
    if (!progress) {
      for (Vertex p : order)
        if (f[p] < 0) fail(on_fail, "image of " + dom.id(p) + " is not determined");
    }
  }
  return f;
}

PPMap universal_map_through_cubulation(const PPMap& psi, const Cubulation& c, bool reverse) {
  if (!psi.domain().same_as(c.source))
    fail(ErrorKind::DomainMismatch, "map domain is not the cubulated graph");
  const Graph& m = c.graph;
  std::vector<Vertex> f(m.order(), -1);
  for (std::size_t v = 0; v < c.eta.size(); ++v) {
    Vertex target = psi(Vertex(v));
    Vertex& slot = f[c.eta[v]];
    if (slot >= 0 && slot != target)
      fail(ErrorKind::NotFactorizable,
           "map differs on vertices with the same principal orientation (" + m.id(c.eta[v]) + ")");
    slot = target;
  }
  f = complete_map(m, psi.codomain(), std::move(f), ErrorKind::NotFactorizable, reverse);
  auto report = check_map(m, psi.codomain(), f);
  if (!report.ok) fail(ErrorKind::NotFactorizable, "induced map is not parallel-preserving: " + report.message);
  return validate(m, psi.codomain(), std::move(f));
}

}  // namespace cubefold
