#include "cubicpm/catalog.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "cubicpm/canonical.hpp"
#include "cubicpm/connectivity.hpp"
#include "cubicpm/named_graphs.hpp"

namespace cubicpm {
namespace {

// Joins new vertices subdividing e1 and e2 (the same edge when equal).
MultiGraph insert_edge(const MultiGraph& g, EdgeId e1, EdgeId e2) {
  const int n = g.vertex_count();
  const VertexId x = n;
  const VertexId y = n + 1;
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (e != e1 && e != e2) edges.push_back(g.edge(e));
  const Edge a = g.edge(e1);
  const Edge b = g.edge(e2);
  if (e1 == e2) {
    edges.push_back({a.u, x});
    edges.push_back({x, y});
    edges.push_back({y, a.v});
  } else {
    edges.push_back({a.u, x});
    edges.push_back({x, a.v});
    edges.push_back({b.u, y});
    edges.push_back({y, b.v});
  }
  edges.push_back({x, y});
  return MultiGraph(n + 2, std::move(edges));
}

// Subdivides e by c and hangs c - a, with a joined to both ends of u = v.
MultiGraph hang_pendant_block(const MultiGraph& g, EdgeId e) {
  const int n = g.vertex_count();
  const VertexId c = n;
  const VertexId a = n + 1;
  const VertexId u = n + 2;
  const VertexId v = n + 3;
  std::vector<Edge> edges;
  for (EdgeId f = 0; f < g.edge_count(); ++f)
    if (f != e) edges.push_back(g.edge(f));
  edges.push_back({g.edge(e).u, c});
  edges.push_back({c, g.edge(e).v});
  edges.push_back({c, a});
  edges.push_back({a, u});
  edges.push_back({a, v});
  edges.push_back({u, v});
  edges.push_back({u, v});
  return MultiGraph(n + 4, std::move(edges));
}

std::mutex cache_lock;
std::map<int, std::vector<MultiGraph>> cache;

const std::vector<MultiGraph>& level(int n) {
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::map<std::string, MultiGraph> found;
  auto add = [&](const MultiGraph& g) {
    std::string cert = canonical_form(g);
    if (!found.count(cert)) found.emplace(std::move(cert), canonical_graph(g));
  };
  if (n == 2) {
    add(named::three_bond());
  } else {
    for (const MultiGraph& g : level(n - 2))
      for (EdgeId e1 = 0; e1 < g.edge_count(); ++e1)
        for (EdgeId e2 = e1; e2 < g.edge_count(); ++e2) add(insert_edge(g, e1, e2));
    if (n >= 6)
      for (const MultiGraph& g : level(n - 4))
        for (EdgeId e = 0; e < g.edge_count(); ++e) add(hang_pendant_block(g, e));
  }
  auto& out = cache[n];
  for (auto& [cert, g] : found) out.push_back(std::move(g));
  return out;
}

}  // namespace

GraphClass parse_graph_class(std::string_view name) {
  for (GraphClass c : {GraphClass::all_bridgeless_cubic, GraphClass::three_edge_connected, GraphClass::bipartite,
                       GraphClass::cyclically_4ec, GraphClass::cyclically_5ec})
    if (name == to_string(c)) return c;
  throw std::invalid_argument("unknown graph class '" + std::string(name) + "'");
}

const char* to_string(GraphClass c) {
  switch (c) {
    case GraphClass::all_bridgeless_cubic: return "all_bridgeless_cubic";
    case GraphClass::three_edge_connected: return "three_edge_connected";
    case GraphClass::bipartite: return "bipartite";
    case GraphClass::cyclically_4ec: return "cyclically_4ec";
    case GraphClass::cyclically_5ec: return "cyclically_5ec";
  }
  return "?";
}

const std::vector<MultiGraph>& connected_cubic_multigraphs(int n) {
  if (n < 2 || n > kMaxCatalogOrder || n % 2 != 0)
    throw std::invalid_argument("catalog order must be even and between 2 and " + std::to_string(kMaxCatalogOrder));
  std::lock_guard guard(cache_lock);
  return level(n);
}

bool in_class(const MultiGraph& g, GraphClass c) {
  if (!g.is_cubic() || !g.is_connected() || !bridges(g).empty()) return false;
  switch (c) {
    case GraphClass::all_bridgeless_cubic: return true;
    case GraphClass::three_edge_connected: return is_k_edge_connected(g, 3);
    case GraphClass::bipartite: return g.is_bipartite();
    case GraphClass::cyclically_4ec: return is_cyclically_k_edge_connected(g, 4);
    case GraphClass::cyclically_5ec: return is_cyclically_k_edge_connected(g, 5);
  }
  return false;
}

std::vector<MultiGraph> generate_catalog(int n, GraphClass c, bool simple_only) {
  std::vector<MultiGraph> out;
  for (const MultiGraph& g : connected_cubic_multigraphs(n))
    if ((!simple_only || g.is_simple()) && in_class(g, c)) out.push_back(g);
  return out;
}

}  // namespace cubicpm
