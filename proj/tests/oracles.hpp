#pragma once

// Slow reference implementations used only by the tests. None of them
// calls into the library beyond reading a graph's edge list.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "cubicpm/multigraph.hpp"

namespace oracle {

using cubicpm::MultiGraph;

/// Every perfect matching as an edge bitmask, by scanning all 2^|E| subsets.
inline std::vector<std::uint64_t> matching_masks(const MultiGraph& g) {
  const int m = g.edge_count();
  const int n = g.vertex_count();
  std::vector<std::uint64_t> out;
  if (n % 2 != 0 || m > 30) return out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (std::popcount(mask) != n / 2) continue;
    std::uint64_t covered = 0;
    bool ok = true;
    for (int e = 0; e < m && ok; ++e) {
      if (!((mask >> e) & 1U)) continue;
      const std::uint64_t ends = (std::uint64_t{1} << g.edge(e).u) | (std::uint64_t{1} << g.edge(e).v);
      ok = (covered & ends) == 0;
      covered |= ends;
    }
    if (ok) out.push_back(mask);
  }
  return out;
}

inline std::uint64_t edge_mask(const std::vector<int>& edges) {
  std::uint64_t m = 0;
  for (int e : edges) m |= std::uint64_t{1} << e;
  return m;
}

inline std::uint64_t count_matchings(const std::vector<std::uint64_t>& all, const std::vector<int>& forced = {},
                                     const std::vector<int>& forbidden = {}) {
  const std::uint64_t f = edge_mask(forced);
  const std::uint64_t x = edge_mask(forbidden);
  return static_cast<std::uint64_t>(
      std::count_if(all.begin(), all.end(), [&](std::uint64_t pm) { return (pm & f) == f && (pm & x) == 0; }));
}

inline std::uint64_t count_matchings(const MultiGraph& g, const std::vector<int>& forced = {},
                                     const std::vector<int>& forbidden = {}) {
  return count_matchings(matching_masks(g), forced, forbidden);
}

inline bool side_has_cycle(const MultiGraph& g, std::uint64_t side) {
  // union-find: a cycle closes when an edge joins two vertices already connected
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (const auto& e : g.edges()) {
    if (!((side >> e.u) & 1U) || !((side >> e.v) & 1U)) continue;
    int a = find(e.u);
    int b = find(e.v);
    if (a == b) return true;
    parent[a] = b;
  }
  return false;
}

inline int cut_size(const MultiGraph& g, std::uint64_t side) {
  int s = 0;
  for (const auto& e : g.edges()) s += ((side >> e.u) & 1U) != ((side >> e.v) & 1U);
  return s;
}

/// Every bipartition {A, B} once, as the side not containing vertex 0.
inline std::vector<std::uint64_t> all_sides(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::uint64_t> out;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t a = 2; a <= full; a += 2) out.push_back(a);
  return out;
}

inline std::optional<int> cyclic_connectivity(const MultiGraph& g) {
  const std::uint64_t full = (std::uint64_t{1} << g.vertex_count()) - 1;
  std::optional<int> best;
  for (std::uint64_t a : all_sides(g)) {
    if (!side_has_cycle(g, a) || !side_has_cycle(g, full & ~a)) continue;
    int s = cut_size(g, a);
    if (!best || s < *best) best = s;
  }
  return best;
}

inline std::vector<std::vector<int>> multiplicities(const MultiGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  for (const auto& e : g.edges()) {
    ++mult[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)];
    ++mult[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)];
  }
  return mult;
}

/// Backtracking search for a multiplicity-preserving bijection.
inline bool isomorphic(const MultiGraph& a, const MultiGraph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto ma = multiplicities(a);
  auto mb = multiplicities(b);
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<bool(int)> place = [&](int v) {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || a.degree(v) != b.degree(w)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = ma[v][u] == mb[w][image[u]];
      if (!ok) continue;
      used[w] = 1;
      image[v] = w;
      if (place(v + 1)) return true;
      used[w] = 0;
    }
    image[v] = -1;
    return false;
  };
  return place(0);
}

inline bool connected(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& e : g.edges()) {
      int w = e.u == v ? e.v : e.v == v ? e.u : -1;
      if (w >= 0 && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

/// Bridgeless: no single edge's removal disconnects the graph.
inline bool bridgeless(const MultiGraph& g) {
  for (int e = 0; e < g.edge_count(); ++e) {
    std::vector<std::pair<int, int>> rest;
    for (int f = 0; f < g.edge_count(); ++f)
      if (f != e) rest.emplace_back(g.edge(f).u, g.edge(f).v);
    if (!connected(MultiGraph::from_edge_list(g.vertex_count(), rest))) return false;
  }
  return true;
}

/// Connected loopless cubic multigraphs on n vertices up to isomorphism,
/// from all symmetric multiplicity matrices with row sums 3.
inline std::vector<MultiGraph> cubic_multigraphs(int n) {
  std::vector<std::vector<int>> mult(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  std::vector<int> left(static_cast<std::size_t>(n), 3);
  std::map<std::vector<int>, std::vector<MultiGraph>> buckets;
  std::vector<MultiGraph> out;

  auto invariant = [&](const MultiGraph& g) {
    auto mm = multiplicities(g);
    std::vector<int> key;
    for (int v = 0; v < n; ++v) {
      std::vector<int> row;
      int triangles = 0;
      for (int u = 0; u < n; ++u) {
        if (mm[v][u]) row.push_back(mm[v][u]);
        for (int w = u + 1; w < n; ++w) triangles += mm[v][u] && mm[v][w] && mm[u][w];
      }
      std::sort(row.begin(), row.end());
      key.push_back(triangles * 100 + static_cast<int>(row.size()) * 10 + row.back());
    }
    std::sort(key.begin(), key.end());
    return key;
  };

  std::function<void(int, int)> fill = [&](int i, int j) {
    if (i == n) {
      std::vector<std::pair<int, int>> pairs;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          for (int k = 0; k < mult[a][b]; ++k) pairs.emplace_back(a, b);
      MultiGraph g = MultiGraph::from_edge_list(n, pairs);
      if (!connected(g)) return;
      auto& bucket = buckets[invariant(g)];
      for (const MultiGraph& h : bucket)
        if (isomorphic(g, h)) return;
      bucket.push_back(g);
      out.push_back(g);
      return;
    }
    if (j == n) {
      if (left[i] == 0) fill(i + 1, i + 2);
      return;
    }
    for (int k = 0; k <= std::min(left[i], left[j]); ++k) {
      mult[i][j] = mult[j][i] = k;
      left[i] -= k;
      left[j] -= k;
      fill(i, j + 1);
      left[i] += k;
      left[j] += k;
    }
    mult[i][j] = mult[j][i] = 0;
  };
  fill(0, 1);
  return out;
}

}  // namespace oracle
