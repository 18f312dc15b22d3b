#pragma once

#include <optional>
#include <vector>

#include "cubicpm/matching.hpp"
#include "cubicpm/multigraph.hpp"
#include "cubicpm/rational.hpp"

namespace cubicpm {

/// Every perfect matching of g uses exactly one edge of the cut.
/// Throws GraphError unless g is matching covered.
bool is_tight(const MultiGraph& g, const Cut& cut);

/// Same test without the matching-covered precondition (vacuously true
/// when g has no perfect matching).
bool every_matching_crosses_once(const MultiGraph& g, const Cut& cut);

/// A tight cut with at least 3 vertices on each side, searched among cuts
/// of size 3 only. In cubic bridgeless graphs every tight cut has size 3, so
/// the search is complete there. Throws unless g is matching covered.
std::optional<Cut> find_nontrivial_tight_cut(const MultiGraph& g);

enum class PieceKind { brick, brace };

const char* to_string(PieceKind kind);

struct DecompositionPiece {
  MultiGraph graph;
  PieceKind kind = PieceKind::brick;
  /// Original vertices behind every piece vertex; a contracted vertex
  /// stands for the whole shrunk side.
  std::vector<VertexSet> origin;
};

struct Decomposition {
  std::vector<DecompositionPiece> pieces;
  int brick_count = 0;
  int brace_count = 0;
  /// Tight cuts in the order applied, lifted to the input graph.
  std::vector<Cut> cut_trace;
};

/// Which tight cut to split along when a piece has several.
enum class CutChoice { first, last };

/// Splits along nontrivial tight cuts into G/A and G/B until none remain.
/// Throws GraphError unless g is matching covered.
Decomposition decompose(const MultiGraph& g, CutChoice choice = CutChoice::first);

/// G - {u, v} has a perfect matching for all u != v. Throws on odd order.
bool is_bicritical(const MultiGraph& g);

/// 3-vertex-connected and bicritical.
bool is_brick(const MultiGraph& g);

/// |E| - |V| + 1 - b(G). Throws unless g is matching covered.
int polytope_dimension(const MultiGraph& g);

/// Affine dimension of the perfect matching incidence vectors, by exact
/// elimination. Throws GraphError when g has no perfect matching.
int pm_affine_dimension(const MultiGraph& g);

inline constexpr int kOddSetVertexBound = 16;

struct MembershipResult {
  enum class Violation { none, negative_entry, vertex_sum, odd_set };

  bool member = false;
  Violation violation = Violation::none;
  EdgeId edge = -1;      // negative_entry
  VertexId vertex = -1;  // vertex_sum
  VertexSet odd_set;     // odd_set
  Rational value;        // offending entry, vertex sum or cut sum
};

/// Edmonds' description: w >= 0, w(delta(v)) = 1 for every v, and
/// w(delta(S)) >= 1 for every odd S. The odd-set family is enumerated
/// exhaustively (at most kOddSetVertexBound vertices) and skipped for
/// bipartite graphs, where the first two conditions suffice.
MembershipResult polytope_membership(const MultiGraph& g, const std::vector<Rational>& w);

}  // namespace cubicpm
