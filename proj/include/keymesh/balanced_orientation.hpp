#pragma once

#include "keymesh/graph.hpp"

namespace keymesh {

// Orientation balanced to within one at every vertex: d-(v) == d+(v) when
// deg(v) is even and |d-(v) - d+(v)| == 1 when deg(v) is odd, so
// d-(v) <= ceil(deg(v)/2) everywhere. Built per connected component by
// pairing odd-degree vertices (ascending id) with temporary parallel edges,
// walking a directed eulerian circuit, and dropping the pairing edges.
Orientation balanced_orientation(const Graph& g);

}  // namespace keymesh
