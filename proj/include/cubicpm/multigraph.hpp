#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cubicpm/vertex_set.hpp"

namespace cubicpm {

/// Raised when an operation's graph-level precondition does not hold.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  VertexId other(VertexId w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Multiset of vertex degrees different from three, sorted ascending.
/// A graph is X-near cubic iff its profile equals X; cubic iff empty.
using DegreeProfile = std::vector<int>;

/// Undirected loopless multigraph on vertices 0..n-1.
///
/// Parallel edges are distinct entries of the edge list and keep stable
/// indices, so every counting routine treats them as distinguishable
/// (the 2-vertex 3-bond has three perfect matchings). Values are immutable
/// after construction.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(int vertex_count, std::vector<Edge> edges);

  /// Throws GraphError on out-of-range ids or loops.
  static MultiGraph from_edge_list(int n, std::span<const std::pair<int, int>> pairs);
  static MultiGraph from_edge_list(int n, std::initializer_list<std::pair<int, int>> pairs) {
    return from_edge_list(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }

  /// Incident edge ids of v in increasing id order.
  std::span<const EdgeId> incident(VertexId v) const { return incidence_.at(static_cast<std::size_t>(v)); }
  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

  int multiplicity(VertexId u, VertexId v) const;
  std::vector<VertexId> neighbors(VertexId v) const;  // with repetition, in incidence order

  bool is_cubic() const;
  bool is_simple() const;
  bool is_connected() const;
  DegreeProfile degree_profile() const;
  int min_degree() const;

  /// Colour classes if bipartite.
  std::optional<std::pair<VertexSet, VertexSet>> bipartition() const;
  bool is_bipartite() const { return bipartition().has_value(); }

  /// Vertices reachable from `start` inside `within`.
  VertexSet component_of(VertexId start, VertexSet within) const;
  /// Connected components of the subgraph induced by `within`.
  std::vector<VertexSet> components(VertexSet within) const;
  /// Edges with both ends in `side`.
  int induced_edge_count(VertexSet side) const;

  /// Subgraph induced by `keep`, relabelled in increasing order.
  MultiGraph induced(VertexSet keep) const;
  /// Graph with the listed edges deleted (other edge ids shift down).
  MultiGraph without_edges(std::span<const EdgeId> removed) const;
  /// Same edges with all parallel classes collapsed to one edge.
  MultiGraph simple_reduction() const;

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// Vertex partition (A, B) with its cut edges.
struct Cut {
  VertexSet side_a;
  VertexSet side_b;
  std::vector<EdgeId> edges;  // increasing id order

  int size() const { return static_cast<int>(edges.size()); }
  Cut swapped() const { return Cut{side_b, side_a, edges}; }
};

/// Builds the cut with side A = `side_a`. Throws if either side is empty.
Cut make_cut(const MultiGraph& g, VertexSet side_a);

struct Contraction {
  MultiGraph graph;
  std::vector<VertexId> vertex_image;  // old vertex -> new vertex
  std::vector<EdgeId> edge_image;      // old edge -> new edge, -1 for dropped loops
};

/// Contracts every part to a single vertex, dropping loops and keeping
/// parallel edges. New ids follow the order of each class's smallest old
/// vertex. Parts must be disjoint and induce connected subgraphs.
Contraction contract(const MultiGraph& g, std::span<const VertexSet> parts);

/// G/A: the side `part` shrunk to one vertex.
Contraction contract_side(const MultiGraph& g, VertexSet part);

/// Replaces v (degree 3) by a triangle t1 t2 t3. t1 reuses the id v, t2 = n
/// and t3 = n + 1; the i-th incident edge of v (in id order) is moved to t_i.
/// The three triangle edges t1t2, t2t3, t1t3 are appended in that order.
MultiGraph replace_vertex_with_triangle(const MultiGraph& g, VertexId v);

/// Gluing through u in g and v in h. The result holds g - u (relabelled in
/// order) followed by h - v; the far end of u's i-th edge is joined to the far
/// end of v's slot_map[i]-th edge.
MultiGraph glue(const MultiGraph& g, VertexId u, const MultiGraph& h, VertexId v,
                std::array<int, 3> slot_map = {0, 1, 2});

/// Two disjoint pairs of cut-edge indices, e.g. {{0,1},{2,3}}.
using CutPairing = std::array<std::array<int, 2>, 2>;

/// G^A_{ij}: side A of a 4-edge-cut with edges a_i a_j and a_k a_l added.
/// The pairing is normalised, so complementary pairings give equal graphs.
MultiGraph four_cut_completion_edges(const MultiGraph& g, const Cut& cut, CutPairing pairing);

/// G^A_{(ij)}: side A plus two adjacent new vertices x = |A|, y = |A| + 1,
/// x joined to a_i, a_j and y joined to a_k, a_l.
MultiGraph four_cut_completion_vertices(const MultiGraph& g, const Cut& cut, CutPairing pairing);

/// Attachment vertex in side A of every cut edge, in cut order.
std::vector<VertexId> cut_attachments(const MultiGraph& g, const Cut& cut);

}  // namespace cubicpm
