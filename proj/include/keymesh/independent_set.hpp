#pragma once

#include "keymesh/graph.hpp"

namespace keymesh {

inline constexpr int kDefaultExactCap = 40;

enum class MisMode { Exact, Greedy };

struct IndependentSet {
  VertexSet members;
  bool exact;  // false: |members| is only a lower bound on alpha(G)
};

// Exact mode runs a branch-and-bound search and refuses graphs with more
// than exact_cap vertices (throws ExactCapExceeded; use greedy mode or raise
// the cap). Greedy mode returns a maximal independent set.
IndependentSet max_independent_set(const Graph& g, MisMode mode,
                                   int exact_cap = kDefaultExactCap);

}  // namespace keymesh
