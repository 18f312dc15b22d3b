#pragma once

#include <string>
#include <vector>

#include "cubicpm/multigraph.hpp"

namespace cubicpm {

inline constexpr int kCanonicalVertexBound = 16;

struct CanonicalLabeling {
  std::string certificate;          // equal iff isomorphic as multigraphs
  std::vector<VertexId> new_label;  // old vertex -> canonical position
};

/// Canonical labelling by colour refinement plus exhaustive individualisation.
/// Every leaf of the search tree is visited; the lexicographically smallest
/// adjacency certificate wins. Throws GraphError above `max_vertices`.
CanonicalLabeling canonical_labeling(const MultiGraph& g, int max_vertices = kCanonicalVertexBound);

/// Byte string identifying the isomorphism class of g.
std::string canonical_form(const MultiGraph& g, int max_vertices = kCanonicalVertexBound);

/// g relabelled canonically, edges sorted by (u, v) with u < v.
MultiGraph canonical_graph(const MultiGraph& g, int max_vertices = kCanonicalVertexBound);

bool are_isomorphic(const MultiGraph& a, const MultiGraph& b, int max_vertices = kCanonicalVertexBound);

}  // namespace cubicpm
