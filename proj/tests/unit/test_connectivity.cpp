#include <doctest.h>

#include "../oracles.hpp"
#include "cubicpm/catalog.hpp"
#include "cubicpm/connectivity.hpp"
#include "cubicpm/named_graphs.hpp"

using namespace cubicpm;

namespace {

// Two triangles joined by one edge: every vertex but the joints has degree 2.
MultiGraph barbell() { return MultiGraph::from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}}); }

std::vector<MultiGraph> small_catalog(int max_n) {
  std::vector<MultiGraph> out;
  for (int n = 2; n <= max_n; n += 2)
    for (const MultiGraph& g : connected_cubic_multigraphs(n)) out.push_back(g);
  return out;
}

}  // namespace

TEST_CASE("bridges") {
  CHECK(bridges(named::k4()).empty());
  CHECK(bridges(named::petersen()).empty());
  CHECK(bridges(named::three_bond()).empty());
  CHECK(bridges(barbell()) == std::vector<EdgeId>{6});
  for (const MultiGraph& g : small_catalog(10)) CHECK(bridges(g).empty() == oracle::bridgeless(g));
}

TEST_CASE("cyclic cuts") {
  MultiGraph p = named::petersen();
  CHECK_FALSE(is_cyclic_cut(p, make_cut(p, VertexSet{0})));
  MultiGraph prism = named::prism();
  CHECK(is_cyclic_cut(prism, make_cut(prism, VertexSet{0, 1, 2})));
  CHECK(side_has_cycle(named::three_bond(), VertexSet{0, 1}));

  SUBCASE("large sides force a cycle") {
    // a k-cut with both sides of at least k - 1 vertices in a min-degree-3 graph
    for (const MultiGraph& g : small_catalog(10)) {
      for (const Cut& c : enumerate_cuts(g, 5)) {
        if (c.side_a.size() >= c.size() - 1 && c.side_b.size() >= c.size() - 1) CHECK(is_cyclic_cut(g, c));
      }
    }
  }
}

TEST_CASE("cyclic edge-connectivity") {
  CHECK(cyclic_edge_connectivity(named::petersen()) == 5);
  CHECK(cyclic_edge_connectivity(named::prism()) == 3);
  CHECK_FALSE(cyclic_edge_connectivity(named::k4()).has_value());
  CHECK_FALSE(cyclic_edge_connectivity(named::three_bond()).has_value());
  CHECK(is_cyclically_k_edge_connected(named::k4(), 7));
  CHECK_FALSE(is_cyclically_k_edge_connected(named::prism(), 4));
  CHECK_THROWS_AS(cyclic_edge_connectivity(barbell()), GraphError);

  for (const MultiGraph& g : small_catalog(10)) {
    CyclicConnectivity c = cyclic_edge_connectivity(g);
    CHECK(c == oracle::cyclic_connectivity(g));
    if (c) CHECK(*c >= edge_connectivity(g));
  }
}

TEST_CASE("cut enumeration") {
  auto k4_cuts = enumerate_cuts(named::k4(), 3);
  REQUIRE(k4_cuts.size() == 4);
  for (const Cut& c : k4_cuts) CHECK(std::min(c.side_a.size(), c.side_b.size()) == 1);

  CHECK(enumerate_cuts(named::petersen(), 3, true).empty());

  MultiGraph x = named::exceptional_graph();
  int triangle_cuts = 0;
  for (const Cut& c : enumerate_cuts(x, 3, true))
    if (c.side_a.size() == 3 || c.side_b.size() == 3) ++triangle_cuts;
  CHECK(triangle_cuts == 3);

  SUBCASE("matches all bipartitions") {
    for (const MultiGraph& g : small_catalog(10)) {
      for (int k = 2; k <= 5; ++k) {
        std::vector<std::uint64_t> expected;
        for (std::uint64_t a : oracle::all_sides(g))
          if (oracle::cut_size(g, a) <= k) expected.push_back(a);
        std::vector<std::uint64_t> got;
        for (const Cut& c : enumerate_cuts(g, k)) got.push_back(c.side_a.bits());
        std::sort(expected.begin(), expected.end());
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
      }
    }
  }
}

TEST_CASE("edge and vertex connectivity") {
  CHECK(edge_connectivity(named::petersen()) == 3);
  CHECK(edge_connectivity(barbell()) == 1);
  CHECK(edge_connectivity(named::three_bond()) == 3);
  for (const MultiGraph& g : small_catalog(10)) {
    int best = 1 << 20;
    for (std::uint64_t a : oracle::all_sides(g)) best = std::min(best, oracle::cut_size(g, a));
    CHECK(edge_connectivity(g) == best);
  }

  CHECK_FALSE(vertex_connectivity_at_most(named::k4(), 2).found);
  CHECK_FALSE(vertex_connectivity_at_most(named::petersen(), 2).found);
  CHECK(vertex_connectivity_at_most(named::petersen(), 3).found);
  CHECK(is_k_vertex_connected(named::k4(), 3));
  CHECK_FALSE(is_k_vertex_connected(named::k4(), 4));
  CHECK_THROWS_AS(vertex_connectivity_at_most(named::k4(), 4), GraphError);

  // a simple cubic graph with a 2-edge-cut also has a 2-vertex cut
  for (const MultiGraph& g : generate_catalog(10, GraphClass::all_bridgeless_cubic, true)) {
    if (edge_connectivity(g) != 2) continue;
    VertexCutWitness w = vertex_connectivity_at_most(g, 2);
    REQUIRE(w.found);
    CHECK(w.separator.size() <= 2);
    VertexSet rest = VertexSet::all(g.vertex_count()) - VertexSet::from(w.separator);
    CHECK(g.component_of(rest.front(), rest) != rest);
  }

  ConnectivityReport r = connectivity_report(named::petersen());
  CHECK(r.connected);
  CHECK(r.bridge_count == 0);
  CHECK(r.edge_connectivity == 3);
  CHECK(r.vertex_connectivity == 3);
  CHECK(r.cyclic_edge_connectivity == 5);
  CHECK(connectivity_report(named::k4()).vertex_connectivity == 3);
}
