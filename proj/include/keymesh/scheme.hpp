#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "keymesh/graph.hpp"

namespace keymesh {

// The pair (f, W): every edge carries a key-graph index in 1..t, and W_j
// lists the vertices that hold the j-th secret outright. A W_j may name
// vertices outside the j-th key graph; the verifier reports such schemes as
// insecure instead of the representation ruling them out.
class IosScheme {
public:
  // f is indexed like graph.edges() and must be surjective onto 1..t.
  IosScheme(Graph graph, int t, std::vector<int> f, std::vector<VertexSet> w_sets);

  const Graph& graph() const { return graph_; }
  int t() const { return t_; }
  const std::vector<int>& f() const { return f_; }
  int f_of(int edge_index) const { return f_[edge_index]; }
  const std::vector<VertexSet>& w_sets() const { return w_sets_; }
  const VertexSet& w(int j) const { return w_sets_[j - 1]; }
  bool holds_secret(int u, int j) const;

  friend bool operator==(const IosScheme& a, const IosScheme& b) = default;

private:
  Graph graph_;
  int t_ = 0;
  std::vector<int> f_;
  std::vector<VertexSet> w_sets_;
};

struct KeyGraph {
  int index;                // j
  VertexSet vertices;       // vertices spanned by the edges
  std::vector<Edge> edges;  // sorted
};

// The t key graphs; their edge sets partition the communication graph.
std::vector<KeyGraph> key_graphs(const IosScheme& scheme);

enum class Lemma { LMinus1, L1, L2, L3, L4, L5 };
std::string_view lemma_name(Lemma lemma);  // "L-1", "L1", ...

struct Violation {
  int key_graph;       // j
  Lemma lemma;
  int offender;        // vertex able to compute a key for an edge it is not on
  Edge victim;         // such an edge
  std::string detail;  // human-readable condition that failed

  std::string message() const;  // "key graph 1: Lemma L5: not a star centred at 1"
};

struct KeyGraphType {
  enum class Kind { Type0, Type1, Type2, Invalid };
  Kind kind = Kind::Type0;
  int centre = 0;                      // Type1
  Edge edge{0, 0};                     // Type2
  std::optional<Violation> violation;  // Invalid
};

// Type i means |W_j| = i and the structural condition for that size holds:
// type 1 needs a star centred on the holder, type 2 a single edge joining
// the two holders. Anything else is Invalid, tagged with the first failing
// condition in the order L-1, L4, L3, L5.
KeyGraphType classify_key_graph(const IosScheme& scheme, int j);

struct SecurityVerdict {
  std::vector<Violation> violations;
  bool secure() const { return violations.empty(); }
};

// Secure iff no user can compute a key for an edge it is not an endpoint
// of; equivalently, every key graph classifies as type 0, 1 or 2.
SecurityVerdict verify_secure(const IosScheme& scheme);

// Items held per user: one secret per W membership plus one derived key per
// incident edge of every other key graph. The centre/leaf split is
// populated only when every key graph is a type-1 star.
struct StorageProfile {
  std::vector<int> s;  // index u-1
  long long total = 0;
  int max = 0;
  bool star_ios = false;
  std::vector<int> c, l;  // index u-1; empty unless star_ios

  int storage(int u) const { return s[u - 1]; }
  int centres(int u) const { return c[u - 1]; }
  int leaves(int u) const { return l[u - 1]; }
};

StorageProfile storage_profile(const IosScheme& scheme);

// Rewrites a secure scheme so every key graph is a type-1 star without
// changing any vertex's storage: a two-holder edge keeps its smaller
// endpoint as centre, and a holderless key graph splits into one
// single-edge star per edge. Split-off stars are appended after the
// surviving indices, then everything is renumbered 1..t'.
IosScheme to_star_ios(const IosScheme& scheme);

// One star per vertex of positive indegree, made of its in-edges, centred
// and held there. Stars are indexed in ascending centre order, so a centre
// never owns two stars.
IosScheme from_orientation(const Orientation& o);

}  // namespace keymesh
