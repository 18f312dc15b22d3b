#include "cubicpm/connectivity.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace cubicpm {
namespace {

void require_small(const MultiGraph& g, const char* what) {
  if (g.vertex_count() > VertexSet::kCapacity)
    throw GraphError(std::string(what) + " supports at most 64 vertices");
}

int boundary_size(const MultiGraph& g, VertexSet side) {
  int count = 0;
  for (const Edge& e : g.edges())
    if (side.contains(e.u) != side.contains(e.v)) ++count;
  return count;
}

VertexSet neighbourhood(const MultiGraph& g, VertexId v) {
  VertexSet out;
  for (EdgeId e : g.incident(v)) out.insert(g.edge(e).other(v));
  return out;
}

}  // namespace

std::vector<EdgeId> bridges(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<EdgeId> out;
  int clock = 0;
  std::function<void(VertexId, EdgeId)> dfs = [&](VertexId v, EdgeId via) {
    order[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = clock++;
    for (EdgeId e : g.incident(v)) {
      if (e == via) continue;
      VertexId w = g.edge(e).other(v);
      if (order[static_cast<std::size_t>(w)] == -1) {
        dfs(w, e);
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
        if (low[static_cast<std::size_t>(w)] > order[static_cast<std::size_t>(v)]) out.push_back(e);
      } else {
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], order[static_cast<std::size_t>(w)]);
      }
    }
  };
  for (VertexId v = 0; v < n; ++v)
    if (order[static_cast<std::size_t>(v)] == -1) dfs(v, -1);
  std::sort(out.begin(), out.end());
  return out;
}

bool side_has_cycle(const MultiGraph& g, VertexSet side) {
  // a forest has exactly |V| - #components edges
  const int components = static_cast<int>(g.components(side).size());
  return g.induced_edge_count(side) > side.size() - components;
}

bool is_cyclic_cut(const MultiGraph& g, const Cut& cut) {
  return side_has_cycle(g, cut.side_a) && side_has_cycle(g, cut.side_b);
}

std::vector<VertexSet> connected_vertex_sets(const MultiGraph& g, int max_boundary) {
  require_small(g, "connected set enumeration");
  const int n = g.vertex_count();
  std::vector<VertexSet> nbr(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) nbr[static_cast<std::size_t>(v)] = neighbourhood(g, v);

  std::vector<VertexSet> out;
  const VertexSet everything = VertexSet::all(n);
  for (VertexId root = 0; root < n; ++root) {
    // vertices below the root are never part of a set rooted here
    const VertexSet below(root == 0 ? 0 : (std::uint64_t{1} << root) - 1);
    std::function<void(VertexSet, VertexSet, VertexSet)> grow = [&](VertexSet set, VertexSet frontier,
                                                                  VertexSet excluded) {
      if (frontier.empty()) {
        if (set != everything && (max_boundary < 0 || boundary_size(g, set) <= max_boundary)) out.push_back(set);
        return;
      }
      VertexId w = frontier.front();
      grow(set, frontier - VertexSet{w}, excluded | VertexSet{w});
      VertexSet bigger = set | VertexSet{w};
      grow(bigger, (frontier | nbr[static_cast<std::size_t>(w)]) - bigger - excluded - below, excluded);
    };
    VertexSet start{root};
    grow(start, nbr[static_cast<std::size_t>(root)] - below - start, VertexSet{});
  }
  return out;
}

std::vector<Cut> enumerate_cuts(const MultiGraph& g, int max_size, bool nontrivial_only) {
  require_small(g, "cut enumeration");
  const int n = g.vertex_count();
  if (n < 2 || max_size < 0) return {};

  struct Piece {
    VertexSet set;
    VertexSet closed_nbr;  // set plus its neighbours
    int boundary;
  };
  std::vector<Piece> pieces;
  for (VertexSet s : connected_vertex_sets(g, max_size)) {
    VertexSet closed = s;
    s.for_each([&](VertexId v) { closed = closed | neighbourhood(g, v); });
    pieces.push_back({s, closed, boundary_size(g, s)});
  }

  std::set<std::uint64_t> seen;
  // unions of pairwise non-adjacent connected pieces; boundaries add up
  std::function<void(std::size_t, VertexSet, VertexSet, int)> combine = [&](std::size_t from, VertexSet uni,
                                                                           VertexSet blocked, int size) {
    if (!uni.empty() && uni.size() < n) {
      VertexSet a = uni.contains(0) ? uni.complement(n) : uni;
      seen.insert(a.bits());
    }
    for (std::size_t i = from; i < pieces.size(); ++i) {
      const Piece& p = pieces[i];
      if (size + p.boundary > max_size) continue;
      if (!(p.set & blocked).empty()) continue;
      if (!uni.empty() && p.set.front() < uni.front()) continue;  // keep a canonical order of pieces
      combine(i + 1, uni | p.set, blocked | p.closed_nbr, size + p.boundary);
    }
  };
  std::sort(pieces.begin(), pieces.end(), [](const Piece& x, const Piece& y) { return x.set.front() < y.set.front(); });
  combine(0, VertexSet{}, VertexSet{}, 0);

  std::vector<Cut> cuts;
  for (std::uint64_t bits : seen) {
    Cut c = make_cut(g, VertexSet(bits));
    if (c.size() > max_size) continue;
    if (nontrivial_only && (c.side_a.size() < 3 || c.side_b.size() < 3)) continue;
    cuts.push_back(std::move(c));
  }
  std::sort(cuts.begin(), cuts.end(), [](const Cut& x, const Cut& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.side_a.bits() < y.side_a.bits();
  });
  return cuts;
}

CyclicConnectivity cyclic_edge_connectivity(const MultiGraph& g) {
  require_small(g, "cyclic edge-connectivity");
  if (!g.is_connected()) throw GraphError("cyclic edge-connectivity needs a connected graph");
  if (g.vertex_count() > 0 && g.min_degree() < 3) throw GraphError("cyclic edge-connectivity needs minimum degree 3");
  const int n = g.vertex_count();
  CyclicConnectivity best;
  // a minimum cyclic cut can be taken with both sides connected
  for (VertexSet s : connected_vertex_sets(g)) {
    if (s.contains(0)) continue;
    VertexSet rest = s.complement(n);
    if (g.component_of(rest.front(), rest) != rest) continue;
    if (!side_has_cycle(g, s) || !side_has_cycle(g, rest)) continue;
    int size = boundary_size(g, s);
    if (!best || size < *best) best = size;
  }
  return best;
}

bool is_cyclically_k_edge_connected(const MultiGraph& g, int k) {
  CyclicConnectivity c = cyclic_edge_connectivity(g);
  return !c || *c >= k;
}

namespace {

// Edge-disjoint s-t paths, stopping at `limit`.
int local_edge_connectivity(const MultiGraph& g, VertexId s, VertexId t, int limit) {
  const int n = g.vertex_count();
  std::vector<int> flow(static_cast<std::size_t>(g.edge_count()), 0);  // +1 means u -> v
  auto residual = [&](EdgeId e, VertexId from) {
    const Edge& ed = g.edge(e);
    int f = flow[static_cast<std::size_t>(e)];
    return from == ed.u ? 1 - f : 1 + f;
  };
  int paths = 0;
  while (paths < limit) {
    std::vector<EdgeId> via(static_cast<std::size_t>(n), -1);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<VertexId> queue{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t head = 0; head < queue.size() && !seen[static_cast<std::size_t>(t)]; ++head) {
      VertexId v = queue[head];
      for (EdgeId e : g.incident(v)) {
        VertexId w = g.edge(e).other(v);
        if (seen[static_cast<std::size_t>(w)] || residual(e, v) <= 0) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        via[static_cast<std::size_t>(w)] = e;
        queue.push_back(w);
      }
    }
    if (!seen[static_cast<std::size_t>(t)]) break;
    for (VertexId v = t; v != s;) {
      EdgeId e = via[static_cast<std::size_t>(v)];
      VertexId prev = g.edge(e).other(v);
      flow[static_cast<std::size_t>(e)] += prev == g.edge(e).u ? 1 : -1;
      v = prev;
    }
    ++paths;
  }
  return paths;
}

}  // namespace

int edge_connectivity(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 0;
  if (!g.is_connected()) return 0;
  int best = g.min_degree();
  for (VertexId t = 1; t < n && best > 0; ++t) best = std::min(best, local_edge_connectivity(g, 0, t, best));
  return best;
}

bool is_k_edge_connected(const MultiGraph& g, int k) { return edge_connectivity(g) >= k; }

VertexCutWitness vertex_connectivity_at_most(const MultiGraph& g, int k) {
  require_small(g, "vertex connectivity");
  if (k < 0 || k > 3) throw GraphError("vertex connectivity queries support 0 <= k <= 3");
  const int n = g.vertex_count();
  const VertexSet everything = VertexSet::all(n);
  auto separates = [&](VertexSet removed) {
    VertexSet rest = everything - removed;
    if (rest.size() < 2) return false;
    return g.component_of(rest.front(), rest) != rest;
  };
  std::vector<VertexId> chosen;
  VertexCutWitness out;
  std::function<bool(int, int, VertexSet)> pick = [&](int size, VertexId from, VertexSet removed) {
    if (static_cast<int>(chosen.size()) == size) return separates(removed);
    for (VertexId v = from; v < n; ++v) {
      chosen.push_back(v);
      VertexSet next = removed;
      next.insert(v);
      if (pick(size, v + 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (int size = 0; size <= k; ++size) {
    chosen.clear();
    if (pick(size, 0, VertexSet{})) {
      out.found = true;
      out.separator = chosen;
      return out;
    }
  }
  return out;
}

bool is_k_vertex_connected(const MultiGraph& g, int k) {
  if (k <= 0) return true;
  if (g.vertex_count() < k + 1) return false;
  return !vertex_connectivity_at_most(g, k - 1).found;
}

ConnectivityReport connectivity_report(const MultiGraph& g) {
  ConnectivityReport r;
  r.connected = g.is_connected();
  r.bridge_count = static_cast<int>(bridges(g).size());
  r.edge_connectivity = edge_connectivity(g);
  r.vertex_connectivity = 4;
  for (int k = 0; k <= 3; ++k) {
    if (vertex_connectivity_at_most(g, k).found) {
      r.vertex_connectivity = k;
      break;
    }
  }
  // no separator at all: complete underlying graph
  if (r.vertex_connectivity == 4 && g.vertex_count() - 1 <= 3) r.vertex_connectivity = std::max(0, g.vertex_count() - 1);
  if (r.connected && g.vertex_count() > 0 && g.min_degree() >= 3) r.cyclic_edge_connectivity = cyclic_edge_connectivity(g);
  return r;
}

}  // namespace cubicpm
