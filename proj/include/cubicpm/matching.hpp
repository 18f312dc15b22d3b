#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "cubicpm/multigraph.hpp"

namespace cubicpm {

using MatchingCount = std::uint64_t;

/// Edges every counted matching must contain / must avoid.
struct EdgeConstraints {
  std::vector<EdgeId> forced;
  std::vector<EdgeId> forbidden;
};

/// A vertex set S whose deletion leaves more than |S| odd components.
struct TutteBarrier {
  std::vector<VertexId> set;
  int odd_component_count = 0;

  bool certifies() const { return odd_component_count > static_cast<int>(set.size()); }
};

struct PerfectMatchingCheck {
  bool exists = false;
  std::vector<EdgeId> matching;         // when exists, includes the forced edges
  std::optional<TutteBarrier> barrier;  // when not, for the residual graph
};

/// Exact perfect-matching counter over induced subgraphs of one graph.
///
/// Branches on a remaining vertex of minimum residual degree; results are
/// memoised by the remaining vertex set, and sets with at least
/// `kPruneThreshold` vertices are first checked for a perfect matching with
/// the blossom algorithm. A counter is tied to one graph and one set of
/// forbidden edges, so repeated queries (per-edge counts, vertex deletions,
/// boundary tables) share the memo.
class MatchingCounter {
 public:
  static constexpr int kPruneThreshold = 12;

  explicit MatchingCounter(const MultiGraph& g, std::span<const EdgeId> forbidden = {});

  /// Perfect matchings of the subgraph induced by `active`.
  MatchingCount count(VertexSet active);
  MatchingCount count_all() { return count(VertexSet::all(n_)); }
  int vertex_count() const { return n_; }

 private:
  MatchingCount count_rec(VertexSet active);

  int n_;
  std::vector<std::vector<std::pair<EdgeId, VertexId>>> adj_;  // allowed edges only
  std::vector<VertexSet> nbr_;
  std::unordered_map<std::uint64_t, MatchingCount> memo_;
};

/// Maximum matching size of the subgraph induced by `active`, using only
/// edges between the given neighbour sets (Edmonds' blossom algorithm).
/// `mate` receives the partner of every matched vertex (-1 otherwise).
int maximum_matching(std::span<const VertexSet> neighbours, VertexSet active, std::vector<VertexId>* mate = nullptr);

/// Feasibility under constraints, with a witness either way. Throws
/// GraphError when forced edges share a vertex or overlap forbidden ones.
PerfectMatchingCheck has_perfect_matching(const MultiGraph& g, const EdgeConstraints& constraints = {});

/// Does g minus the vertices in `removed` have a perfect matching?
bool has_perfect_matching_without(const MultiGraph& g, VertexSet removed);

/// Gallai-Edmonds barrier of the subgraph induced by `active`: the
/// neighbours of the vertices missed by some maximum matching.
TutteBarrier gallai_edmonds_barrier(const MultiGraph& g, VertexSet active, std::span<const EdgeId> forbidden = {});

MatchingCount count_perfect_matchings(const MultiGraph& g, const EdgeConstraints& constraints = {});

/// Perfect matchings of g with vertex set `removed` deleted.
MatchingCount count_perfect_matchings_without(const MultiGraph& g, VertexSet removed);

MatchingCount count_avoiding(const MultiGraph& g, EdgeId e);

/// Counting by enumeration of all edge subsets of size n/2 (independent of
/// MatchingCounter); intended as a cross-check for small graphs.
MatchingCount count_perfect_matchings_brute_force(const MultiGraph& g, const EdgeConstraints& constraints = {});

/// Calls `visit` with every perfect matching (edge ids ascending).
void for_each_perfect_matching(const MultiGraph& g, const std::function<void(std::span<const EdgeId>)>& visit);
std::vector<std::vector<EdgeId>> perfect_matchings(const MultiGraph& g);

struct MatchingProfile {
  MatchingCount total = 0;
  std::vector<MatchingCount> per_edge;  // indexed by edge id
  EdgeConstraints constraints;
  bool matching_covered = false;        // every edge in >= 1 matching
  bool double_covered = false;          // every edge in >= 2 matchings
};

MatchingProfile matching_profile(const MultiGraph& g, const EdgeConstraints& constraints = {});

inline constexpr int kMaxBoundaryCut = 6;

/// m_a[X] counts matchings of G[A] covering A except the A-ends of the cut
/// edges in X (X is a bitmask over cut positions); m_b likewise for B.
/// Entries are 0 when two edges of X share an end on that side.
struct BoundaryProfile {
  Cut cut;
  std::vector<MatchingCount> m_a;
  std::vector<MatchingCount> m_b;

  /// Sum over X of m_a[X] * m_b[X]; equals the perfect-matching count of G.
  MatchingCount combined_count() const;
  /// Matchings of G using exactly the cut edges in X.
  MatchingCount through(unsigned mask) const;
};

BoundaryProfile boundary_profile(const MultiGraph& g, const Cut& cut);

}  // namespace cubicpm
