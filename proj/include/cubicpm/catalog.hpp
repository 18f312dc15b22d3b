#pragma once

#include <string_view>
#include <vector>

#include "cubicpm/multigraph.hpp"

namespace cubicpm {

enum class GraphClass { all_bridgeless_cubic, three_edge_connected, bipartite, cyclically_4ec, cyclically_5ec };

/// Accepts the enumerator names; throws std::invalid_argument otherwise.
GraphClass parse_graph_class(std::string_view name);
const char* to_string(GraphClass c);

inline constexpr int kMaxCatalogOrder = 14;

/// Isomorphism classes of connected loopless cubic multigraphs of order n,
/// canonically labelled and sorted by certificate.
///
/// Order n + 2 is reached from order n by joining two subdivision points of
/// (possibly equal) edges, and from order n - 2 by hanging a pendant block
/// (a vertex subdividing an edge, joined to a vertex adjacent to both ends
/// of a double edge). A graph where no edge deletion followed by suppression
/// of the two degree-2 ends yields a connected loopless cubic graph has such
/// a pendant block, so the two moves reach every class.
/// Throws std::invalid_argument unless n is even and 2 <= n <= 14.
const std::vector<MultiGraph>& connected_cubic_multigraphs(int n);

/// Bridgeless members of the class, optionally restricted to simple graphs.
bool in_class(const MultiGraph& g, GraphClass c);
std::vector<MultiGraph> generate_catalog(int n, GraphClass c, bool simple_only = false);

}  // namespace cubicpm
