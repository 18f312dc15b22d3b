#include "cubicpm/brick_brace.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cubicpm/connectivity.hpp"

namespace cubicpm {
namespace {

constexpr int kMaxMaskCut = 20;

void require_matching_covered(const MultiGraph& g, const char* what) {
  if (!matching_profile(g).matching_covered) throw GraphError(std::string(what) + " needs a matching covered graph");
}

// Matchings of g using exactly the cut edges in each mask are m_a * m_b,
// with both factors read off one shared counter.
bool crosses_once(MatchingCounter& counter, const MultiGraph& g, const Cut& cut) {
  const int k = cut.size();
  if (k > kMaxMaskCut) throw GraphError("cut too large for tightness test");
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
    if (std::popcount(x) == 1) continue;
    VertexSet ends_a;
    VertexSet ends_b;
    bool clash = false;
    for (int i = 0; i < k && !clash; ++i) {
      if (!((x >> i) & 1U)) continue;
      const Edge& ed = g.edge(cut.edges[static_cast<std::size_t>(i)]);
      VertexId a = cut.side_a.contains(ed.u) ? ed.u : ed.v;
      VertexId b = ed.other(a);
      clash = ends_a.contains(a) || ends_b.contains(b);
      ends_a.insert(a);
      ends_b.insert(b);
    }
    if (clash) continue;
    if (counter.count(cut.side_a - ends_a) != 0 && counter.count(cut.side_b - ends_b) != 0) return false;
  }
  return true;
}

std::vector<Cut> nontrivial_tight_cuts(const MultiGraph& g) {
  MatchingCounter counter(g);
  std::vector<Cut> out;
  for (Cut& c : enumerate_cuts(g, 3, true)) {
    if (c.side_a.size() % 2 == 0) continue;
    if (crosses_once(counter, g, c)) out.push_back(std::move(c));
  }
  return out;
}

VertexSet lift(const std::vector<VertexSet>& origin, VertexSet side) {
  VertexSet out;
  side.for_each([&](VertexId v) { out = out | origin[static_cast<std::size_t>(v)]; });
  return out;
}

// Piece obtained by shrinking `shrunk` of a piece to one vertex.
DecompositionPiece shrink(const DecompositionPiece& piece, VertexSet shrunk) {
  Contraction c = contract_side(piece.graph, shrunk);
  DecompositionPiece out;
  out.graph = std::move(c.graph);
  out.origin.assign(static_cast<std::size_t>(out.graph.vertex_count()), VertexSet{});
  for (VertexId v = 0; v < piece.graph.vertex_count(); ++v) {
    auto& slot = out.origin[static_cast<std::size_t>(c.vertex_image[static_cast<std::size_t>(v)])];
    slot = slot | piece.origin[static_cast<std::size_t>(v)];
  }
  return out;
}

}  // namespace

const char* to_string(PieceKind kind) { return kind == PieceKind::brick ? "brick" : "brace"; }

bool every_matching_crosses_once(const MultiGraph& g, const Cut& cut) {
  MatchingCounter counter(g);
  return crosses_once(counter, g, cut);
}

bool is_tight(const MultiGraph& g, const Cut& cut) {
  require_matching_covered(g, "tightness");
  return every_matching_crosses_once(g, cut);
}

std::optional<Cut> find_nontrivial_tight_cut(const MultiGraph& g) {
  require_matching_covered(g, "tight cut search");
  auto cuts = nontrivial_tight_cuts(g);
  if (cuts.empty()) return std::nullopt;
  return cuts.front();
}

Decomposition decompose(const MultiGraph& g, CutChoice choice) {
  require_matching_covered(g, "decomposition");
  if (g.vertex_count() > VertexSet::kCapacity) throw GraphError("decomposition supports at most 64 vertices");

  DecompositionPiece root;
  root.graph = g;
  for (VertexId v = 0; v < g.vertex_count(); ++v) root.origin.push_back(VertexSet{v});

  Decomposition out;
  std::vector<DecompositionPiece> pending{std::move(root)};
  while (!pending.empty()) {
    DecompositionPiece piece = std::move(pending.back());
    pending.pop_back();
    auto cuts = nontrivial_tight_cuts(piece.graph);
    if (cuts.empty()) {
      piece.kind = piece.graph.is_bipartite() ? PieceKind::brace : PieceKind::brick;
      (piece.kind == PieceKind::brick ? out.brick_count : out.brace_count)++;
      out.pieces.push_back(std::move(piece));
      continue;
    }
    const Cut& cut = choice == CutChoice::first ? cuts.front() : cuts.back();
    out.cut_trace.push_back(make_cut(g, lift(piece.origin, cut.side_a)));
    // G/B is pushed last so the A side is finished first
    pending.push_back(shrink(piece, cut.side_a));
    pending.push_back(shrink(piece, cut.side_b));
  }
  return out;
}

bool is_bicritical(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n % 2 != 0) throw GraphError("bicriticality needs an even number of vertices");
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (!has_perfect_matching_without(g, VertexSet{u, v})) return false;
  return true;
}

bool is_brick(const MultiGraph& g) {
  if (g.vertex_count() % 2 != 0) return false;
  return is_k_vertex_connected(g, 3) && is_bicritical(g);
}

int polytope_dimension(const MultiGraph& g) {
  Decomposition d = decompose(g);
  return g.edge_count() - g.vertex_count() + 1 - d.brick_count;
}

int pm_affine_dimension(const MultiGraph& g) {
  const int m = g.edge_count();
  std::vector<char> first;
  // reduced rows, each with its pivot column
  std::vector<std::vector<Rational>> basis;
  std::vector<int> pivots;
  for_each_perfect_matching(g, [&](std::span<const EdgeId> pm) {
    std::vector<char> chi(static_cast<std::size_t>(m), 0);
    for (EdgeId e : pm) chi[static_cast<std::size_t>(e)] = 1;
    if (first.empty()) {
      first = std::move(chi);
      return;
    }
    std::vector<Rational> row(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) row[static_cast<std::size_t>(j)] = chi[static_cast<std::size_t>(j)] - first[static_cast<std::size_t>(j)];
    for (std::size_t r = 0; r < basis.size(); ++r) {
      const Rational factor = row[static_cast<std::size_t>(pivots[r])];
      if (factor == 0) continue;
      for (int j = 0; j < m; ++j) row[static_cast<std::size_t>(j)] -= factor * basis[r][static_cast<std::size_t>(j)];
    }
    auto lead = std::find_if(row.begin(), row.end(), [](const Rational& x) { return x != 0; });
    if (lead == row.end()) return;
    const int p = static_cast<int>(lead - row.begin());
    const Rational scale = *lead;
    for (Rational& x : row) x /= scale;
    // keep earlier rows reduced against the new pivot
    for (auto& other : basis) {
      const Rational factor = other[static_cast<std::size_t>(p)];
      if (factor == 0) continue;
      for (int j = 0; j < m; ++j) other[static_cast<std::size_t>(j)] -= factor * row[static_cast<std::size_t>(j)];
    }
    basis.push_back(std::move(row));
    pivots.push_back(p);
  });
  if (first.empty()) throw GraphError("affine dimension needs at least one perfect matching");
  return static_cast<int>(basis.size());
}

MembershipResult polytope_membership(const MultiGraph& g, const std::vector<Rational>& w) {
  if (static_cast<int>(w.size()) != g.edge_count())
    throw std::invalid_argument("weight vector has " + std::to_string(w.size()) + " entries, expected " +
                                std::to_string(g.edge_count()));
  MembershipResult out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (w[static_cast<std::size_t>(e)] < 0) {
      out.violation = MembershipResult::Violation::negative_entry;
      out.edge = e;
      out.value = w[static_cast<std::size_t>(e)];
      return out;
    }
  }
  const int n = g.vertex_count();
  for (VertexId v = 0; v < n; ++v) {
    Rational sum = 0;
    for (EdgeId e : g.incident(v)) sum += w[static_cast<std::size_t>(e)];
    if (sum != 1) {
      out.violation = MembershipResult::Violation::vertex_sum;
      out.vertex = v;
      out.value = sum;
      return out;
    }
  }
  if (n % 2 != 0) {
    // the whole vertex set is odd with an empty cut
    out.violation = MembershipResult::Violation::odd_set;
    out.odd_set = VertexSet::all(n);
    out.value = 0;
    return out;
  }
  if (!g.is_bipartite()) {
    if (n > kOddSetVertexBound)
      throw GraphError("odd-set enumeration supports at most " + std::to_string(kOddSetVertexBound) + " vertices");
    // S and its complement give the same cut, so fix the last vertex outside S
    const std::uint64_t limit = n == 0 ? 0 : std::uint64_t{1} << (n - 1);
    for (std::uint64_t bits = 1; bits < limit; ++bits) {
      const int size = std::popcount(bits);
      if (size % 2 == 0 || size == 1) continue;
      VertexSet s(bits);
      Rational sum = 0;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (s.contains(ed.u) != s.contains(ed.v)) sum += w[static_cast<std::size_t>(e)];
      }
      if (sum < 1) {
        out.violation = MembershipResult::Violation::odd_set;
        out.odd_set = s;
        out.value = sum;
        return out;
      }
    }
  }
  out.member = true;
  return out;
}

}  // namespace cubicpm
