#pragma once

#include <optional>

#include "keymesh/graph.hpp"

namespace keymesh {

// ceil(eps/n): every orientation has a vertex of outdegree at least this.
int mmo_lower_bound(const Graph& g);

// An orientation with every outdegree <= k, or nullopt when none exists.
// Feasibility is a max-flow problem: one unit per edge must be absorbed by
// one of its endpoints, and each vertex absorbs at most k units; an edge is
// directed out of the vertex that absorbed it.
std::optional<Orientation> orient_with_max_outdegree(const Graph& g, int k);

struct MmoResult {
  int value;
  Orientation witness;  // max outdegree == value
};

// Minimum over all orientations of the maximum outdegree, with a witness.
// Binary search over the feasibility subproblem.
MmoResult mmo(const Graph& g);

}  // namespace keymesh
