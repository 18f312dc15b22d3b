#pragma once

#include <array>
#include <string>
#include <vector>

#include "cubicpm/matching.hpp"
#include "cubicpm/multigraph.hpp"
#include "cubicpm/rational.hpp"

namespace cubicpm {

struct KleeCertificate {
  bool is_klee = false;
  /// Triangles contracted in order, each in the coordinates of the graph
  /// at that step (the triangle becomes its smallest vertex's position).
  std::vector<std::array<VertexId, 3>> contractions;
};

/// Contracts triangles with three distinct outside neighbours until K4 is
/// reached or no such triangle is left. Multigraphs are never klee.
/// Throws GraphError unless g is cubic and connected.
KleeCertificate klee_certificate(const MultiGraph& g);
bool is_klee(const MultiGraph& g);

/// Vertex sets of all triangles, sorted.
std::vector<std::array<VertexId, 3>> triangles(const MultiGraph& g);

/// All triangles contracted at once. Throws GraphError when two triangles
/// overlap or some cyclic 3-edge-cut does not cut off a triangle.
MultiGraph core(const MultiGraph& g);

enum class VertexClass { A, B, C, dangerous, good };

const char* to_string(VertexClass c);

/// Type (omega; mu1, mu2, mu3). Slot i is the i-th incident edge of the
/// vertex in id order.
struct KleeVertexType {
  MatchingCount omega = 0;
  std::array<MatchingCount, 3> mu{};
  std::array<VertexId, 3> neighbours{};
  VertexClass cls = VertexClass::good;

  friend bool operator==(const KleeVertexType&, const KleeVertexType&) = default;
};

VertexClass classify(MatchingCount omega, const std::array<MatchingCount, 3>& mu);

/// Throws GraphError unless v has degree 3 and three distinct neighbours.
KleeVertexType vertex_type(const MultiGraph& g, VertexId v);

/// Types of all vertices, sharing one counter.
std::vector<KleeVertexType> vertex_types(const MultiGraph& g);

struct ExpansionReport {
  MultiGraph expanded;  // G with v replaced by the triangle v, n, n + 1
  MatchingCount before = 0;
  MatchingCount after = 0;
  KleeVertexType type;
  bool recurrence_holds = false;  // after == before + omega
  std::array<KleeVertexType, 3> new_types;
  std::array<KleeVertexType, 3> predicted_types;
  bool new_types_hold = false;
  /// Every other vertex: omega and each mu (same slot) did not decrease.
  bool monotone = false;
  /// Every other vertex dangerous after the expansion was dangerous before.
  bool dangerous_inherited = false;
};

ExpansionReport expand_and_check(const MultiGraph& g, VertexId v);

struct KleeClass {
  std::string certificate;
  MultiGraph graph;  // canonical labelling
};

inline constexpr int kMaxKleeOrder = 16;

/// Isomorphism classes of klee-graphs of order n, sorted by certificate.
/// Levels are built by expanding every vertex of the previous level.
/// Throws std::invalid_argument unless n is even and 4 <= n <= 16.
std::vector<KleeClass> enumerate_klee(int n);

struct KleeStats {
  MatchingCount m = 0;
  int alpha = 0;  // A-vertices
  int beta = 0;   // B-vertices
  Rational potential;  // m - alpha - beta / 2
};

/// Throws GraphError unless g is a klee-graph.
KleeStats klee_stats(const MultiGraph& g);

enum class NiceClause { none, other_side_not_klee, large_side, not_tight, three_through };

const char* to_string(NiceClause c);

struct NiceCutResult {
  bool nice = false;
  NiceClause clause = NiceClause::none;
  /// The clause fired with the roles of the two sides exchanged.
  bool swapped = false;
};

/// 3-edge-cut E(A,B) is nice when G/A is not klee and G/B is not klee, or
/// |A| >= 9, or |A| >= 5 and the cut is not tight, or |A| = 3 and at least
/// two perfect matchings use all three cut edges. Both role assignments are
/// tried. Throws GraphError unless g is cubic and the cut has size 3.
NiceCutResult is_nice_cut(const MultiGraph& g, const Cut& cut);

}  // namespace cubicpm
