#pragma once

#include "keymesh/graph.hpp"
#include "keymesh/scheme.hpp"

namespace keymesh {

// Brute-force reference implementations for cross-checking the solvers and
// the verifier at desk scale. Enumeration is refused beyond the budget.
struct OracleBudget {
  int max_edges = 16;     // cap for 2^eps orientation sweeps
  int max_vertices = 10;  // cap for 2^n subset sweeps
};

// alpha(G) by enumerating all vertex subsets.
int brute_alpha(const Graph& g, OracleBudget budget = {});

// Minimum over all 2^eps orientations of the maximum outdegree.
int brute_mmo(const Graph& g, OracleBudget budget = {});

struct StorageOptima {
  long long min_total;
  int min_max;
};

// Minimum total and minimum maximum storage over all 2^eps orientations,
// scoring s(u) = [d-(u) > 0] + d+(u). Merging all stars with one centre
// never raises any vertex's storage and every secure scheme converts to a
// star scheme with the same per-vertex storage, so sweeping orientations
// with one star per in-neighbourhood covers the optima.
StorageOptima brute_storage_optima(const Graph& g, OracleBudget budget = {});

struct BruteSecurityVerdict {
  bool secure;
  int offender = 0;     // when insecure: a user that computes a foreign key
  Edge victim{0, 0};    // an edge whose key that user computes
};

// Simulated single adversary: replays the storage rule for every user and
// checks every non-incident edge against the user's material.
BruteSecurityVerdict brute_secure(const IosScheme& scheme);

}  // namespace keymesh
