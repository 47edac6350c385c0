#pragma once

#include <variant>

#include "keymesh/independent_set.hpp"
#include "keymesh/scheme.hpp"

namespace keymesh {

enum class Objective { Total, Max, Euler };

struct TotalCertificate {
  VertexSet independent_set;
  bool exact;  // false: greedy fallback, value is only an upper bound
};

struct MaxCertificate {
  int mmo_g;
  VertexSet w;  // vertices of degree above mmo_g
  int mmo_h;
  bool equality;  // optimum is mmo_g rather than mmo_g + 1
};

struct EulerCertificate {
  int max_degree;
  int bound;  // (d+3)/2 for odd d, (d+2)/2 for even d
};

struct OptimizationReport {
  Objective objective;
  long long value;  // storage attained by the scheme
  IosScheme scheme;
  std::variant<TotalCertificate, MaxCertificate, EulerCertificate> certificate;
};

struct TotalStorageBound {
  long long value;
  bool exact;
};

// n + eps - alpha(G). Above the exact cap the greedy set gives a flagged
// upper bound instead.
TotalStorageBound total_storage_optimum(const Graph& g, int exact_cap = kDefaultExactCap);

// Secure star scheme of minimum total storage: all edges leave a maximum
// independent set, remaining edges point to the larger id.
OptimizationReport min_total_storage_scheme(const Graph& g, int exact_cap = kDefaultExactCap);

struct MaxStorageOptimum {
  int value;
  MaxCertificate certificate;
};

// Exact minimum of the per-user maximum storage: MMO(G) when the subgraph
// induced by the vertices of degree above MMO(G) can itself be oriented
// below MMO(G), else MMO(G) + 1.
MaxStorageOptimum max_storage_optimum(const Graph& g);

// Secure star scheme attaining max_storage_optimum.
OptimizationReport min_max_storage_scheme(const Graph& g);

// Secure star scheme from the balanced orientation; max storage is at most
// (d+3)/2 for odd maximum degree d and (d+2)/2 for even d.
OptimizationReport euler_upper_bound_scheme(const Graph& g);

}  // namespace keymesh
