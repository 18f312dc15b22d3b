#pragma once

#include "cubicpm/multigraph.hpp"

namespace cubicpm::named {

/// Two vertices joined by three parallel edges.
MultiGraph three_bond();
MultiGraph k4();
/// Colour classes {0,1,2} and {3,4,5}.
MultiGraph k33();
/// Triangles {0,1,2}, {3,4,5} and rungs i -- i+3.
MultiGraph prism();
/// Outer cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
MultiGraph petersen();
MultiGraph cube();
/// K_{3,3} with the three vertices of one colour class replaced by triangles.
MultiGraph exceptional_graph();

}  // namespace cubicpm::named
