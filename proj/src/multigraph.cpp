#include "cubicpm/multigraph.hpp"

#include <algorithm>
#include <numeric>

namespace cubicpm {

MultiGraph::MultiGraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)), incidence_(static_cast<std::size_t>(vertex_count)) {
  if (vertex_count < 0) throw GraphError("negative vertex count");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw GraphError("edge " + std::to_string(i) + " references a vertex outside 0.." +
                       std::to_string(n_ - 1));
    if (e.u == e.v) throw GraphError("edge " + std::to_string(i) + " is a loop at vertex " + std::to_string(e.u));
    incidence_[static_cast<std::size_t>(e.u)].push_back(static_cast<EdgeId>(i));
    incidence_[static_cast<std::size_t>(e.v)].push_back(static_cast<EdgeId>(i));
  }
}

MultiGraph MultiGraph::from_edge_list(int n, std::span<const std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return MultiGraph(n, std::move(edges));
}

int MultiGraph::multiplicity(VertexId u, VertexId v) const {
  int count = 0;
  for (EdgeId e : incident(u))
    if (edges_[static_cast<std::size_t>(e)].other(u) == v) ++count;
  return count;
}

std::vector<VertexId> MultiGraph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (EdgeId e : incident(v)) out.push_back(edge(e).other(v));
  return out;
}

bool MultiGraph::is_cubic() const {
  for (VertexId v = 0; v < n_; ++v)
    if (degree(v) != 3) return false;
  return true;
}

bool MultiGraph::is_simple() const {
  for (VertexId v = 0; v < n_; ++v) {
    auto nb = neighbors(v);
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false;
  }
  return true;
}

bool MultiGraph::is_connected() const {
  if (n_ == 0) return true;
  if (n_ > VertexSet::kCapacity) {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : incident(v)) {
        VertexId w = edge(e).other(v);
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    return reached == n_;
  }
  return component_of(0, VertexSet::all(n_)).size() == n_;
}

DegreeProfile MultiGraph::degree_profile() const {
  DegreeProfile out;
  for (VertexId v = 0; v < n_; ++v)
    if (degree(v) != 3) out.push_back(degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

int MultiGraph::min_degree() const {
  int best = n_ == 0 ? 0 : degree(0);
  for (VertexId v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::optional<std::pair<VertexSet, VertexSet>> MultiGraph::bipartition() const {
  if (n_ > VertexSet::kCapacity) throw GraphError("bipartition supports at most 64 vertices");
  std::vector<int> colour(static_cast<std::size_t>(n_), -1);
  for (VertexId s = 0; s < n_; ++s) {
    if (colour[static_cast<std::size_t>(s)] != -1) continue;
    colour[static_cast<std::size_t>(s)] = 0;
    std::vector<VertexId> stack{s};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : incident(v)) {
        VertexId w = edge(e).other(v);
        int& cw = colour[static_cast<std::size_t>(w)];
        if (cw == -1) {
          cw = 1 - colour[static_cast<std::size_t>(v)];
          stack.push_back(w);
        } else if (cw == colour[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  VertexSet a, b;
  for (VertexId v = 0; v < n_; ++v) (colour[static_cast<std::size_t>(v)] == 0 ? a : b).insert(v);
  return std::make_pair(a, b);
}

VertexSet MultiGraph::component_of(VertexId start, VertexSet within) const {
  VertexSet seen{start};
  std::vector<VertexId> stack{start};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : incident(v)) {
      VertexId w = edge(e).other(v);
      if (within.contains(w) && !seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen;
}

std::vector<VertexSet> MultiGraph::components(VertexSet within) const {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet c = component_of(rest.front(), within);
    out.push_back(c);
    rest = rest - c;
  }
  return out;
}

int MultiGraph::induced_edge_count(VertexSet side) const {
  int count = 0;
  for (const Edge& e : edges_)
    if (side.contains(e.u) && side.contains(e.v)) ++count;
  return count;
}

MultiGraph MultiGraph::induced(VertexSet keep) const {
  std::vector<VertexId> image(static_cast<std::size_t>(n_), -1);
  int next = 0;
  keep.for_each([&](VertexId v) { image[static_cast<std::size_t>(v)] = next++; });
  std::vector<Edge> out;
  for (const Edge& e : edges_)
    if (keep.contains(e.u) && keep.contains(e.v))
      out.push_back({image[static_cast<std::size_t>(e.u)], image[static_cast<std::size_t>(e.v)]});
  return MultiGraph(next, std::move(out));
}

MultiGraph MultiGraph::without_edges(std::span<const EdgeId> removed) const {
  std::vector<char> drop(edges_.size(), 0);
  for (EdgeId e : removed) drop.at(static_cast<std::size_t>(e)) = 1;
  std::vector<Edge> out;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (!drop[i]) out.push_back(edges_[i]);
  return MultiGraph(n_, std::move(out));
}

MultiGraph MultiGraph::simple_reduction() const {
  std::vector<Edge> out;
  std::vector<std::pair<int, int>> seen;
  for (const Edge& e : edges_) {
    std::pair<int, int> key{std::min(e.u, e.v), std::max(e.u, e.v)};
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.emplace_back(key);
    out.push_back(e);
  }
  return MultiGraph(n_, std::move(out));
}

Cut make_cut(const MultiGraph& g, VertexSet side_a) {
  const int n = g.vertex_count();
  if (n > VertexSet::kCapacity) throw GraphError("cuts support at most 64 vertices");
  side_a = side_a & VertexSet::all(n);
  VertexSet side_b = side_a.complement(n);
  if (side_a.empty() || side_b.empty()) throw GraphError("both sides of a cut must be non-empty");
  Cut cut{side_a, side_b, {}};
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (side_a.contains(g.edge(e).u) != side_a.contains(g.edge(e).v)) cut.edges.push_back(e);
  return cut;
}

Contraction contract(const MultiGraph& g, std::span<const VertexSet> parts) {
  const int n = g.vertex_count();
  if (n > VertexSet::kCapacity) throw GraphError("contraction supports at most 64 vertices");
  // representative[v] = smallest vertex of v's class
  std::vector<VertexId> representative(static_cast<std::size_t>(n));
  std::iota(representative.begin(), representative.end(), 0);
  VertexSet used;
  for (const VertexSet& part : parts) {
    if (part.empty()) throw GraphError("contraction part is empty");
    if (!(part & used).empty()) throw GraphError("contraction parts overlap");
    if (!(part - VertexSet::all(n)).empty()) throw GraphError("contraction part references a missing vertex");
    if (g.component_of(part.front(), part) != part) throw GraphError("contraction part is not connected");
    used = used | part;
    part.for_each([&](VertexId v) { representative[static_cast<std::size_t>(v)] = part.front(); });
  }
  Contraction out;
  out.vertex_image.assign(static_cast<std::size_t>(n), -1);
  std::vector<VertexId> rep_image(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (VertexId v = 0; v < n; ++v) {
    VertexId r = representative[static_cast<std::size_t>(v)];
    if (rep_image[static_cast<std::size_t>(r)] == -1) rep_image[static_cast<std::size_t>(r)] = next++;
    out.vertex_image[static_cast<std::size_t>(v)] = rep_image[static_cast<std::size_t>(r)];
  }
  std::vector<Edge> edges;
  out.edge_image.assign(static_cast<std::size_t>(g.edge_count()), -1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    VertexId a = out.vertex_image[static_cast<std::size_t>(g.edge(e).u)];
    VertexId b = out.vertex_image[static_cast<std::size_t>(g.edge(e).v)];
    if (a == b) continue;
    out.edge_image[static_cast<std::size_t>(e)] = static_cast<EdgeId>(edges.size());
    edges.push_back({a, b});
  }
  out.graph = MultiGraph(next, std::move(edges));
  return out;
}

Contraction contract_side(const MultiGraph& g, VertexSet part) {
  std::array<VertexSet, 1> parts{part};
  return contract(g, parts);
}

MultiGraph replace_vertex_with_triangle(const MultiGraph& g, VertexId v) {
  if (v < 0 || v >= g.vertex_count()) throw GraphError("vertex out of range");
  if (g.degree(v) != 3) throw GraphError("triangle replacement needs a vertex of degree 3");
  const int n = g.vertex_count();
  const std::array<VertexId, 3> t{v, n, n + 1};
  std::vector<Edge> edges = g.edges();
  auto inc = g.incident(v);
  for (int i = 0; i < 3; ++i) {
    Edge& e = edges[static_cast<std::size_t>(inc[static_cast<std::size_t>(i)])];
    if (e.u == v)
      e.u = t[static_cast<std::size_t>(i)];
    else
      e.v = t[static_cast<std::size_t>(i)];
  }
  edges.push_back({t[0], t[1]});
  edges.push_back({t[1], t[2]});
  edges.push_back({t[0], t[2]});
  return MultiGraph(n + 2, std::move(edges));
}

MultiGraph glue(const MultiGraph& g, VertexId u, const MultiGraph& h, VertexId v, std::array<int, 3> slot_map) {
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= h.vertex_count()) throw GraphError("vertex out of range");
  if (g.degree(u) != 3 || h.degree(v) != 3) throw GraphError("gluing needs two vertices of degree 3");
  auto sorted = slot_map;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{0, 1, 2}) throw GraphError("slot map must be a permutation of {0,1,2}");

  const int ng = g.vertex_count();
  auto g_image = [&](VertexId w) { return w < u ? w : w - 1; };
  auto h_image = [&](VertexId w) { return ng - 1 + (w < v ? w : w - 1); };

  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (e.u != u && e.v != u) edges.push_back({g_image(e.u), g_image(e.v)});
  for (const Edge& e : h.edges())
    if (e.u != v && e.v != v) edges.push_back({h_image(e.u), h_image(e.v)});
  auto gi = g.incident(u);
  auto hi = h.incident(v);
  for (std::size_t i = 0; i < 3; ++i) {
    VertexId a = g.edge(gi[i]).other(u);
    VertexId b = h.edge(hi[static_cast<std::size_t>(slot_map[i])]).other(v);
    edges.push_back({g_image(a), h_image(b)});
  }
  return MultiGraph(ng - 1 + h.vertex_count() - 1, std::move(edges));
}

std::vector<VertexId> cut_attachments(const MultiGraph& g, const Cut& cut) {
  std::vector<VertexId> out;
  for (EdgeId e : cut.edges) {
    const Edge& ed = g.edge(e);
    out.push_back(cut.side_a.contains(ed.u) ? ed.u : ed.v);
  }
  return out;
}

namespace {

struct FourCutSide {
  MultiGraph side;
  std::array<VertexId, 4> attach{};
  CutPairing pairing{};
};

FourCutSide prepare_four_cut(const MultiGraph& g, const Cut& cut, CutPairing pairing) {
  if (cut.size() != 4) throw GraphError("completion needs a 4-edge-cut");
  std::array<int, 4> idx{pairing[0][0], pairing[0][1], pairing[1][0], pairing[1][1]};
  auto sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 4>{0, 1, 2, 3}) throw GraphError("pairing must split {0,1,2,3} into two pairs");
  for (auto& p : pairing) std::sort(p.begin(), p.end());
  std::sort(pairing.begin(), pairing.end());

  auto attach = cut_attachments(g, cut);
  auto uniq = attach;
  std::sort(uniq.begin(), uniq.end());
  if (std::adjacent_find(uniq.begin(), uniq.end()) != uniq.end())
    throw GraphError("4-edge-cut attachment vertices are not distinct");

  FourCutSide out;
  out.side = g.induced(cut.side_a);
  out.pairing = pairing;
  // induced() relabels in increasing order
  for (std::size_t i = 0; i < 4; ++i) {
    VertexId a = attach[i];
    out.attach[i] = VertexSet(cut.side_a.bits() & ((std::uint64_t{1} << a) - 1)).size();
  }
  return out;
}

}  // namespace

MultiGraph four_cut_completion_edges(const MultiGraph& g, const Cut& cut, CutPairing pairing) {
  FourCutSide s = prepare_four_cut(g, cut, pairing);
  std::vector<Edge> edges = s.side.edges();
  for (const auto& p : s.pairing)
    edges.push_back({s.attach[static_cast<std::size_t>(p[0])], s.attach[static_cast<std::size_t>(p[1])]});
  return MultiGraph(s.side.vertex_count(), std::move(edges));
}

MultiGraph four_cut_completion_vertices(const MultiGraph& g, const Cut& cut, CutPairing pairing) {
  FourCutSide s = prepare_four_cut(g, cut, pairing);
  const int x = s.side.vertex_count();
  const int y = x + 1;
  std::vector<Edge> edges = s.side.edges();
  edges.push_back({x, y});
  for (int k = 0; k < 2; ++k) {
    VertexId hub = k == 0 ? x : y;
    for (int idx : s.pairing[static_cast<std::size_t>(k)])
      edges.push_back({s.attach[static_cast<std::size_t>(idx)], hub});
  }
  return MultiGraph(x + 2, std::move(edges));
}

}  // namespace cubicpm
