#include "cubicpm/named_graphs.hpp"

namespace cubicpm::named {

MultiGraph three_bond() { return MultiGraph::from_edge_list(2, {{0, 1}, {0, 1}, {0, 1}}); }

MultiGraph k4() { return MultiGraph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

MultiGraph k33() {
  return MultiGraph::from_edge_list(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

MultiGraph prism() {
  return MultiGraph::from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

MultiGraph petersen() {
  return MultiGraph::from_edge_list(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                         {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                         {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

MultiGraph cube() {
  return MultiGraph::from_edge_list(8, {{0, 1}, {1, 3}, {3, 2}, {2, 0}, {4, 5}, {5, 7},
                                        {7, 6}, {6, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

MultiGraph exceptional_graph() {
  MultiGraph g = k33();
  // replacing vertex 0 keeps ids 1 and 2 in place
  g = replace_vertex_with_triangle(g, 0);
  g = replace_vertex_with_triangle(g, 1);
  g = replace_vertex_with_triangle(g, 2);
  return g;
}

}  // namespace cubicpm::named
