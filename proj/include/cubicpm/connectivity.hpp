#pragma once

#include <optional>
#include <vector>

#include "cubicpm/multigraph.hpp"

namespace cubicpm {

/// Cyclic edge-connectivity; std::nullopt means the graph has no cyclic cut
/// at all (K4, the 3-bond). Predicates treat that as vacuously >= k.
using CyclicConnectivity = std::optional<int>;

struct ConnectivityReport {
  bool connected = false;
  int bridge_count = 0;
  int edge_connectivity = 0;
  /// Exact when at most 3; 4 stands for "at least 4".
  int vertex_connectivity = 0;
  CyclicConnectivity cyclic_edge_connectivity;
};

/// Edges whose removal disconnects their component. Parallel edges never are.
std::vector<EdgeId> bridges(const MultiGraph& g);

/// Both induced sides contain a cycle; a parallel pair is a cycle.
bool is_cyclic_cut(const MultiGraph& g, const Cut& cut);
bool side_has_cycle(const MultiGraph& g, VertexSet side);

/// All edge-cuts of size <= max_size, one per bipartition, sorted by
/// (size, side A bits). Side A is normalised to the side not containing
/// vertex 0. With nontrivial_only both sides have at least 3 vertices.
///
/// Connected vertex sets are grown from their smallest vertex; a cut whose
/// side is disconnected is assembled from pairwise non-adjacent connected
/// pieces. Exponential in n; intended for n <= 20 or so.
std::vector<Cut> enumerate_cuts(const MultiGraph& g, int max_size, bool nontrivial_only = false);

/// Every connected vertex set S (0 < |S| < n) with |delta(S)| <= max_boundary
/// (no limit when negative), each reported once.
std::vector<VertexSet> connected_vertex_sets(const MultiGraph& g, int max_boundary = -1);

/// Requires a connected graph with minimum degree >= 3.
CyclicConnectivity cyclic_edge_connectivity(const MultiGraph& g);

/// true for the no-cyclic-cut case.
bool is_cyclically_k_edge_connected(const MultiGraph& g, int k);

/// Minimum number of edges whose removal disconnects g (0 if disconnected).
int edge_connectivity(const MultiGraph& g);
bool is_k_edge_connected(const MultiGraph& g, int k);

struct VertexCutWitness {
  bool found = false;
  std::vector<VertexId> separator;
};

/// Looks for a vertex set of size <= k (k <= 3) whose removal leaves a
/// disconnected graph; on success returns the smallest such set found.
VertexCutWitness vertex_connectivity_at_most(const MultiGraph& g, int k);

/// k-vertex-connected: at least k + 1 vertices and no separator below k.
bool is_k_vertex_connected(const MultiGraph& g, int k);

ConnectivityReport connectivity_report(const MultiGraph& g);

}  // namespace cubicpm
