#include <doctest.h>

#include <algorithm>

#include "../oracles.hpp"
#include "cubicpm/brick_brace.hpp"
#include "cubicpm/canonical.hpp"
#include "cubicpm/catalog.hpp"
#include "cubicpm/connectivity.hpp"
#include "cubicpm/klee.hpp"
#include "cubicpm/named_graphs.hpp"

using namespace cubicpm;

namespace {

std::vector<std::string> piece_forms(const Decomposition& d) {
  std::vector<std::string> out;
  for (const auto& p : d.pieces) out.push_back(canonical_form(p.graph.simple_reduction()));
  std::sort(out.begin(), out.end());
  return out;
}

// Two copies of K4 with one edge subdivided, the subdivision vertices joined.
MultiGraph bridged_pair() {
  return MultiGraph::from_edge_list(10, {{0, 4}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                         {5, 9}, {9, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8}, {4, 9}});
}

std::vector<Rational> thirds(const MultiGraph& g) { return std::vector<Rational>(static_cast<std::size_t>(g.edge_count()), Rational(1, 3)); }

}  // namespace

TEST_CASE("tight cuts") {
  MultiGraph p = named::petersen();
  for (VertexId v = 0; v < 10; ++v) CHECK(is_tight(p, make_cut(p, VertexSet{v})));
  CHECK_FALSE(find_nontrivial_tight_cut(p).has_value());
  CHECK_FALSE(find_nontrivial_tight_cut(named::k33()).has_value());

  MultiGraph x = named::exceptional_graph();
  CHECK(is_tight(x, make_cut(x, VertexSet{0, 6, 7})));
  auto found = find_nontrivial_tight_cut(x);
  REQUIRE(found.has_value());
  CHECK(found->size() == 3);
  CHECK((found->side_a.size() == 3 || found->side_b.size() == 3));

  CHECK_THROWS_AS(is_tight(bridged_pair(), make_cut(bridged_pair(), VertexSet{0})), GraphError);

  SUBCASE("tightness matches the enumerated matchings") {
    for (int n = 4; n <= 10; n += 2) {
      for (const MultiGraph& g : generate_catalog(n, GraphClass::all_bridgeless_cubic)) {
        auto all = oracle::matching_masks(g);
        for (const Cut& c : enumerate_cuts(g, 5)) {
          std::uint64_t cut_mask = oracle::edge_mask(c.edges);
          bool once = std::all_of(all.begin(), all.end(), [&](std::uint64_t pm) { return std::popcount(pm & cut_mask) == 1; });
          CHECK(is_tight(g, c) == once);
          if (once) CHECK(c.size() == 3);
        }
      }
    }
  }
}

TEST_CASE("decomposition") {
  Decomposition k33 = decompose(named::k33());
  CHECK(k33.brick_count == 0);
  CHECK(k33.brace_count == 1);

  Decomposition p = decompose(named::petersen());
  CHECK(p.brick_count == 1);
  CHECK(p.brace_count == 0);
  CHECK(p.cut_trace.empty());

  Decomposition x = decompose(named::exceptional_graph());
  CHECK(x.brick_count == 3);
  CHECK(x.brace_count == 1);
  CHECK(x.cut_trace.size() == 3);
  int k4_pieces = 0;
  for (const auto& piece : x.pieces) {
    CHECK(piece.graph.is_cubic());
    if (are_isomorphic(piece.graph, named::k4())) ++k4_pieces;
    if (piece.kind == PieceKind::brace) CHECK(are_isomorphic(piece.graph, named::k33()));
  }
  CHECK(k4_pieces == 3);

  CHECK_THROWS_AS(decompose(bridged_pair()), GraphError);

  SUBCASE("pieces and traced cuts") {
    for (int n = 2; n <= 12; n += 2) {
      for (const MultiGraph& g : generate_catalog(n, GraphClass::all_bridgeless_cubic)) {
        Decomposition first = decompose(g, CutChoice::first);
        Decomposition last = decompose(g, CutChoice::last);
        CHECK(piece_forms(first) == piece_forms(last));
        CHECK(first.brick_count == last.brick_count);
        for (const auto& piece : first.pieces) {
          CHECK(piece.graph.is_cubic());
          CHECK(bridges(piece.graph).empty());
          CHECK((piece.kind == PieceKind::brace) == piece.graph.is_bipartite());
          CHECK_FALSE(find_nontrivial_tight_cut(piece.graph).has_value());
          VertexSet covered;
          for (VertexSet s : piece.origin) covered = covered | s;
          CHECK(covered == VertexSet::all(n));
        }
        for (const Cut& c : first.cut_trace) CHECK(is_tight(g, c));
        if (g.is_bipartite()) CHECK(first.brick_count == 0);
      }
    }
  }
}

TEST_CASE("bricks and bicriticality") {
  CHECK(is_bicritical(named::k4()));
  CHECK_FALSE(is_bicritical(named::k33()));
  CHECK(is_bicritical(named::petersen()));
  CHECK_THROWS_AS(is_bicritical(MultiGraph(3, {})), GraphError);

  CHECK(is_brick(named::k4()));
  CHECK_FALSE(is_brick(named::k33()));
  CHECK(is_brick(named::petersen()));
  CHECK(is_brick(named::prism()));

  for (int n = 4; n <= 12; n += 2)
    for (const KleeClass& k : enumerate_klee(n)) CHECK(is_brick(k.graph));
}

TEST_CASE("polytope dimension") {
  CHECK(polytope_dimension(named::k4()) == 2);
  CHECK(polytope_dimension(named::k33()) == 4);
  CHECK(polytope_dimension(named::petersen()) == 5);
  CHECK(pm_affine_dimension(named::k4()) == 2);
  CHECK(pm_affine_dimension(named::petersen()) == 5);
  MultiGraph x = named::exceptional_graph();
  CHECK(pm_affine_dimension(x) == polytope_dimension(x));
  CHECK(pm_affine_dimension(x) == 18 - 12 + 1 - 3);
  CHECK_THROWS_AS(pm_affine_dimension(MultiGraph(3, {})), GraphError);

  for (int n = 2; n <= 10; n += 2)
    for (const MultiGraph& g : generate_catalog(n, GraphClass::all_bridgeless_cubic))
      CHECK(polytope_dimension(g) == pm_affine_dimension(g));
}

TEST_CASE("polytope membership") {
  for (const MultiGraph& g : {named::k4(), named::petersen(), named::exceptional_graph(), named::k33()}) {
    CHECK(polytope_membership(g, thirds(g)).member);
    for (const auto& pm : perfect_matchings(g)) {
      std::vector<Rational> chi(static_cast<std::size_t>(g.edge_count()), 0);
      for (EdgeId e : pm) chi[static_cast<std::size_t>(e)] = 1;
      CHECK(polytope_membership(g, chi).member);
    }
  }

  MultiGraph b = bridged_pair();
  REQUIRE(b.is_cubic());
  REQUIRE(bridges(b).size() == 1);
  MembershipResult r = polytope_membership(b, thirds(b));
  CHECK_FALSE(r.member);
  CHECK(r.violation == MembershipResult::Violation::odd_set);
  CHECK(r.odd_set.size() % 2 == 1);
  CHECK(r.value < 1);

  std::vector<Rational> w = thirds(named::k4());
  w[2] = Rational(-1, 3);
  MembershipResult neg = polytope_membership(named::k4(), w);
  CHECK(neg.violation == MembershipResult::Violation::negative_entry);
  CHECK(neg.edge == 2);

  std::vector<Rational> half(6, Rational(1, 2));
  MembershipResult sums = polytope_membership(named::k4(), half);
  CHECK(sums.violation == MembershipResult::Violation::vertex_sum);
  CHECK(sums.value == Rational(3, 2));

  CHECK_THROWS_AS(polytope_membership(named::k4(), std::vector<Rational>(5, 0)), std::invalid_argument);

  // on a bipartite graph the first two conditions decide membership
  MultiGraph k33 = named::k33();
  const auto pms = perfect_matchings(k33);
  std::vector<Rational> mix(9, 0);
  for (EdgeId e : pms[0]) mix[static_cast<std::size_t>(e)] += Rational(1, 2);
  for (EdgeId e : pms[1]) mix[static_cast<std::size_t>(e)] += Rational(1, 2);
  CHECK(polytope_membership(k33, mix).member);
}
