#include "cubefold/kernels.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace cubefold::kernels {

namespace {

void bfs_row(const Graph& g, Vertex s, std::int32_t* row, std::vector<Vertex>& queue) {
  const std::size_t n = g.order();
  std::fill(row, row + n, -1);
  queue.clear();
  queue.push_back(s);
  row[s] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v))
      if (row[w] < 0) {
        row[w] = row[v] + 1;
        queue.push_back(w);
      }
  }
}

using Bits = std::vector<std::uint64_t>;

// interval bitsets, row-major over ordered pairs
std::vector<Bits> interval_bits(const Graph& g, const DistanceMatrix& d) {
  const std::size_t n = g.order();
  const std::size_t words = (n + 63) / 64;
  std::vector<Bits> out(n * n, Bits(words, 0));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u; v < n; ++v) {
      Bits& b = out[u * n + v];
      for (std::size_t w = 0; w < n; ++w)
        if (d(Vertex(u), Vertex(w)) + d(Vertex(w), Vertex(v)) == d(Vertex(u), Vertex(v)))
          b[w / 64] |= std::uint64_t{1} << (w % 64);
      out[v * n + u] = b;
    }
  return out;
}

bool single_median(const Bits& a, const Bits& b, const Bits& c) {
  int count = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    count += std::popcount(a[k] & b[k] & c[k]);
    if (count > 1) return false;
  }
  return count == 1;
}

bool occupied(const std::vector<std::uint8_t>& occ, std::size_t walls, std::size_t i,
              std::size_t j, std::uint32_t mask) {
  unsigned a = (mask >> i) & 1u, b = (mask >> j) & 1u;
  return (occ[i * walls + j] >> (2 * a + b)) & 1u;
}

bool mask_ok(std::size_t walls, const std::vector<std::uint8_t>& occ,
             const std::vector<char>& exempt, std::uint32_t mask) {
  for (std::size_t i = 0; i < walls; ++i)
    for (std::size_t j = i; j < walls; ++j) {
      if (exempt[i * walls + j]) continue;
      if (!occupied(occ, walls, i, j, mask)) return false;
    }
  return true;
}

}  // namespace

DistanceMatrix all_pairs_bfs_serial(const Graph& g) {
  DistanceMatrix m;
  m.n = g.order();
  m.d.resize(m.n * m.n);
  std::vector<Vertex> queue;
  for (std::size_t s = 0; s < m.n; ++s) bfs_row(g, Vertex(s), &m.d[s * m.n], queue);
  return m;
}

DistanceMatrix all_pairs_bfs(const Graph& g) {
  DistanceMatrix m;
  m.n = g.order();
  m.d.resize(m.n * m.n);
  const auto n = static_cast<std::int64_t>(m.n);
#pragma omp parallel
  {
    std::vector<Vertex> queue;
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t s = 0; s < n; ++s) bfs_row(g, Vertex(s), &m.d[s * n], queue);
  }
  return m;
}

TripleScan median_triples_serial(const Graph& g) {
  const std::size_t n = g.order();
  const auto& d = g.distances();
  auto iv = interval_bits(g, d);
  TripleScan scan;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y)
      for (std::size_t z = y; z < n; ++z)
        if (!single_median(iv[x * n + y], iv[y * n + z], iv[x * n + z])) {
          if (!scan.first_bad) scan.first_bad = {Vertex(x), Vertex(y), Vertex(z)};
          ++scan.bad;
        }
  return scan;
}

TripleScan median_triples(const Graph& g) {
  const std::size_t n = g.order();
  const auto& d = g.distances();
  auto iv = interval_bits(g, d);
  std::uint64_t bad = 0;
  // smallest offending x, then the serial order inside that row
  std::int64_t first_x = std::numeric_limits<std::int64_t>::max();
  const auto sn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : bad) reduction(min : first_x)
  for (std::int64_t x = 0; x < sn; ++x) {
    for (std::size_t y = x; y < n; ++y)
      for (std::size_t z = y; z < n; ++z)
        if (!single_median(iv[x * n + y], iv[y * n + z], iv[x * n + z])) {
          ++bad;
          first_x = std::min(first_x, x);
        }
  }
  TripleScan scan;
  scan.bad = bad;
  if (bad > 0) {
    const auto x = static_cast<std::size_t>(first_x);
    for (std::size_t y = x; y < n && !scan.first_bad; ++y)
      for (std::size_t z = y; z < n; ++z)
        if (!single_median(iv[x * n + y], iv[y * n + z], iv[x * n + z])) {
          scan.first_bad = {Vertex(x), Vertex(y), Vertex(z)};
          break;
        }
  }
  return scan;
}

std::vector<std::uint8_t> pair_occupancy_serial(const SideTable& side) {
  const std::size_t w = side.size();
  std::vector<std::uint8_t> occ(w * w, 0);
  for (std::size_t i = 0; i < w; ++i)
    for (std::size_t j = 0; j < w; ++j)
      for (std::size_t v = 0; v < side[i].size(); ++v)
        occ[i * w + j] |= std::uint8_t(1u << (2 * side[i][v] + side[j][v]));
  return occ;
}

std::vector<std::uint8_t> pair_occupancy(const SideTable& side) {
  const auto w = static_cast<std::int64_t>(side.size());
  std::vector<std::uint8_t> occ(side.size() * side.size(), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < w; ++i)
    for (std::int64_t j = 0; j < w; ++j) {
      std::uint8_t bits = 0;
      for (std::size_t v = 0; v < side[i].size() && bits != 0xF; ++v)
        bits |= std::uint8_t(1u << (2 * side[i][v] + side[j][v]));
      occ[i * w + j] = bits;
    }
  return occ;
}

std::vector<std::uint32_t> consistent_masks_serial(std::size_t walls,
                                                   const std::vector<std::uint8_t>& occupancy,
                                                   const std::vector<char>& exempt) {
  std::vector<std::uint32_t> out;
  const std::uint64_t total = std::uint64_t{1} << walls;
  for (std::uint64_t m = 0; m < total; ++m)
    if (mask_ok(walls, occupancy, exempt, std::uint32_t(m))) out.push_back(std::uint32_t(m));
  return out;
}

std::vector<std::uint32_t> consistent_masks(std::size_t walls,
                                            const std::vector<std::uint8_t>& occupancy,
                                            const std::vector<char>& exempt) {
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << walls);
  std::vector<char> keep(static_cast<std::size_t>(total), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t m = 0; m < total; ++m)
    keep[m] = mask_ok(walls, occupancy, exempt, std::uint32_t(m));
  std::vector<std::uint32_t> out;
  for (std::int64_t m = 0; m < total; ++m)
    if (keep[m]) out.push_back(std::uint32_t(m));
  return out;
}

}  // namespace cubefold::kernels
