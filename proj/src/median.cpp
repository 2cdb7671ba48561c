#include "cubefold/median.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "cubefold/hyperplane.hpp"
#include "cubefold/kernels.hpp"

namespace cubefold {

std::optional<Vertex> median(const Graph& g, Vertex x, Vertex y, Vertex z) {
  g.check_vertex(x);
  g.check_vertex(y);
  g.check_vertex(z);
  const auto& d = g.distances();
  std::optional<Vertex> found;
  for (Vertex m = 0; m < static_cast<Vertex>(g.order()); ++m) {
    if (d(x, m) + d(m, y) != d(x, y)) continue;
    if (d(y, m) + d(m, z) != d(y, z)) continue;
    if (d(x, m) + d(m, z) != d(x, z)) continue;
    if (found) return std::nullopt;
    found = m;
  }
  return found;
}

namespace {

std::optional<std::array<Vertex, 5>> find_k23(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      std::vector<Vertex> common;
      for (Vertex w : g.neighbors(u))
        if (g.adjacent(w, v)) common.push_back(w);
      for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j)
          for (std::size_t k = j + 1; k < common.size(); ++k) {
            Vertex a = common[i], b = common[j], c = common[k];
            if (g.adjacent(a, b) || g.adjacent(a, c) || g.adjacent(b, c)) continue;
            return std::array<Vertex, 5>{u, v, a, b, c};
          }
    }
  return std::nullopt;
}

std::vector<Vertex> corners(const Graph& g, Vertex x, Vertex a, Vertex b) {
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(a))
    if (w != x && g.adjacent(w, b) && !g.adjacent(w, x)) out.push_back(w);
  return out;
}

std::optional<std::array<Vertex, 7>> find_cube_violation(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex x = 0; x < n; ++x) {
    auto nb = g.neighbors(x);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        for (std::size_t k = j + 1; k < nb.size(); ++k) {
          Vertex a = nb[i], b = nb[j], c = nb[k];
          for (Vertex ab : corners(g, x, a, b))
            for (Vertex ac : corners(g, x, a, c))
              for (Vertex bc : corners(g, x, b, c)) {
                if (ab == ac || ab == bc || ac == bc) continue;
                bool closed = false;
                for (Vertex w : g.neighbors(ab))
                  if (w != x && g.adjacent(w, ac) && g.adjacent(w, bc)) closed = true;
                if (!closed) return std::array<Vertex, 7>{x, a, b, c, ab, ac, bc};
              }
        }
  }
  return std::nullopt;
}

}  // namespace

MedianReport is_median(const Graph& g) {
  return g.memo<MedianReport>([&g] {
    MedianReport r;
    auto scan = kernels::median_triples(g);
    r.bad_triples = scan.bad;
    if (scan.bad == 0) return r;
    r.is_median = false;
    r.witness = scan.first_bad;
    r.k23_found = find_k23(g);
    r.cube_condition_violation = find_cube_violation(g);
    return r;
  });
}

std::string describe(const Graph& g, const MedianReport& r) {
  if (r.is_median) return "median: true";
  std::ostringstream out;
  out << "median: false (";
  if (r.k23_found) {
    const auto& w = *r.k23_found;
    out << "K_{2,3} witness " << g.id(w[0]) << ' ' << g.id(w[1]) << " | " << g.id(w[2]) << ' '
        << g.id(w[3]) << ' ' << g.id(w[4]);
  } else if (r.cube_condition_violation) {
    const auto& w = *r.cube_condition_violation;
    out << "3-cube condition fails at " << g.id(w[0]) << " with corners " << g.id(w[4]) << ' '
        << g.id(w[5]) << ' ' << g.id(w[6]);
  } else {
    const auto& w = *r.witness;
    out << "triple " << g.id(w[0]) << ' ' << g.id(w[1]) << ' ' << g.id(w[2])
        << " has no unique median";
  }
  out << ')';
  return out.str();
}

void require_median(const Graph& g, const std::string& what) {
  const auto& r = is_median(g);
  if (!r.is_median) fail(ErrorKind::NotMedian, what + ": " + describe(g, r));
}

namespace {

void check_members(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) g.check_vertex(v);
}

VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

VertexSet median_hull(const Graph& g, VertexSet s) {
  require_median(g, "median_hull");
  s = normalized(std::move(s));
  check_members(g, s);
  const auto& d = g.distances();
  const auto n = static_cast<Vertex>(g.order());
  std::vector<char> in(g.order(), 0);
  for (Vertex v : s) in[v] = 1;
  // triples with at least one member from the last round's additions
  std::vector<Vertex> all = s, fresh = s;
  for (std::size_t round = 0; !fresh.empty(); ++round) {
    if (round > g.order()) fail(ErrorKind::InternalError, "median hull did not stabilize");
    std::vector<Vertex> added;
    for (Vertex x : fresh)
      for (Vertex y : all)
        for (Vertex z : all) {
          if (y > z) continue;
          for (Vertex m = 0; m < n; ++m) {
            if (d(x, m) + d(m, y) == d(x, y) && d(y, m) + d(m, z) == d(y, z) &&
                d(x, m) + d(m, z) == d(x, z)) {
              if (!in[m]) {
                in[m] = 1;
                added.push_back(m);
              }
              break;
            }
          }
        }
    all.insert(all.end(), added.begin(), added.end());
    fresh = std::move(added);
  }
  return normalized(all);
}

VertexSet convex_hull(const Graph& g, VertexSet s) {
  require_median(g, "convex_hull");
  s = normalized(std::move(s));
  check_members(g, s);
  const auto& d = g.distances();
  const auto n = static_cast<Vertex>(g.order());
  std::vector<char> in(g.order(), 0);
  for (Vertex v : s) in[v] = 1;
  std::vector<Vertex> all = s, fresh = s;
  for (std::size_t round = 0; !fresh.empty(); ++round) {
    if (round > g.order()) fail(ErrorKind::InternalError, "convex hull did not stabilize");
    std::vector<Vertex> added;
    for (Vertex x : fresh)
      for (Vertex y : all)
        for (Vertex w = 0; w < n; ++w)
          if (!in[w] && d(x, w) + d(w, y) == d(x, y)) {
            in[w] = 1;
            added.push_back(w);
          }
    all.insert(all.end(), added.begin(), added.end());
    fresh = std::move(added);
  }
  return normalized(all);
}

bool is_connected_subset(const Graph& g, const VertexSet& s) {
  if (s.empty()) return false;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> queue{s.front()};
  seen[s.front()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Vertex w : g.neighbors(queue[head]))
      if (!seen[w] && contains(s, w)) {
        seen[w] = 1;
        queue.push_back(w);
      }
  return queue.size() == s.size();
}

bool is_convex(const Graph& g, const VertexSet& s) {
  require_median(g, "is_convex");
  auto set = normalized(s);
  check_members(g, set);
  if (!is_connected_subset(g, set))
    fail(ErrorKind::DisconnectedSubset, "subset does not induce a connected subgraph");
  return convex_hull(g, set) == set;
}

std::optional<std::vector<std::vector<char>>> parity_vectors(const Graph& g) {
  const auto& hs = hyperplanes(g);
  const std::size_t k = hs.size();
  std::vector<std::vector<char>> par(g.order());
  std::vector<char> seen(g.order(), 0);
  par[0].assign(k, 0);
  seen[0] = 1;
  std::vector<Vertex> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      auto j = hs.class_of(*g.edge_between(v, w));
      if (!seen[w]) {
        seen[w] = 1;
        par[w] = par[v];
        par[w][j] ^= 1;
        queue.push_back(w);
      }
    }
  }
  for (const Edge& e : g.edges()) {
    auto j = hs.class_of(*g.edge_between(e.u, e.v));
    for (std::size_t i = 0; i < k; ++i) {
      char expect = static_cast<char>(i == static_cast<std::size_t>(j));
      if ((par[e.u][i] ^ par[e.v][i]) != expect) return std::nullopt;
    }
  }
  return par;
}

SubmedianCertificate submedian_certificate(const Graph& g) {
  SubmedianCertificate c;
  const auto& hs = hyperplanes(g);
  c.classes = hs.size();
  auto par = parity_vectors(g);
  c.parity_well_defined = par.has_value();
  if (par) {
    std::vector<Vertex> idx(g.order());
    for (std::size_t v = 0; v < idx.size(); ++v) idx[v] = static_cast<Vertex>(v);
    std::stable_sort(idx.begin(), idx.end(), [&](Vertex a, Vertex b) { return (*par)[a] < (*par)[b]; });
    c.parity_injective = true;
    for (std::size_t i = 1; i < idx.size(); ++i)
      if ((*par)[idx[i]] == (*par)[idx[i - 1]]) {
        c.parity_injective = false;
        c.parity_collision = std::minmax(idx[i - 1], idx[i]);
        break;
      }
  }

  const std::size_t m = g.size();
  c.cycle_rank = m + 1 - g.order();
  const std::size_t words = (m + 63) / 64;
  std::vector<std::vector<std::uint64_t>> basis;  // reduced rows, keyed by pivot
  std::vector<std::size_t> pivots;
  for (const auto& cyc : four_cycles(g)) {
    std::vector<std::uint64_t> row(words, 0);
    for (int i = 0; i < 4; ++i) {
      auto e = static_cast<std::size_t>(g.edge_id(cyc[i], cyc[(i + 1) % 4]));
      row[e / 64] ^= std::uint64_t{1} << (e % 64);
    }
    for (std::size_t b = 0; b < basis.size(); ++b)
      if ((row[pivots[b] / 64] >> (pivots[b] % 64)) & 1u)
        for (std::size_t w = 0; w < words; ++w) row[w] ^= basis[b][w];
    std::size_t pivot = m;
    for (std::size_t w = 0; w < words && pivot == m; ++w)
      if (row[w]) pivot = w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
    if (pivot == m) continue;
    // keep the basis fully reduced on pivot columns
    for (std::size_t b = 0; b < basis.size(); ++b)
      if ((basis[b][pivot / 64] >> (pivot % 64)) & 1u)
        for (std::size_t w = 0; w < words; ++w) basis[b][w] ^= row[w];
    basis.push_back(std::move(row));
    pivots.push_back(pivot);
    if (basis.size() == c.cycle_rank) break;
  }
  c.square_rank = basis.size();
  c.squares_span_cycles = c.square_rank == c.cycle_rank;
  return c;
}

}  // namespace cubefold
