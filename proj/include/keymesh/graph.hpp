#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace keymesh {

// Vertices are integers 1..n throughout.
struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);  // "{u,v}"

// Sorted ascending, no duplicates.
using VertexSet = std::vector<int>;

// Undirected simple graph. Immutable after construction; edges are kept
// sorted lexicographically with u < v in every pair.
class Graph {
public:
  struct Incidence {
    int neighbor;
    int edge;  // index into edges()
  };

  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }

  bool has_edge(int u, int v) const;
  std::optional<int> edge_index(int u, int v) const;
  const std::vector<Incidence>& incident(int u) const;
  int degree(int u) const;
  int max_degree() const;

  // Components sorted internally and ordered by smallest member.
  std::vector<VertexSet> connected_components() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  void check_vertex(int u) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;  // per vertex, sorted by neighbor
};

// Edge-list document: header line "n m", then one "u v" line per edge with
// 1 <= u < v <= n. Lines whose first non-blank character is '#' are skipped.
// Throws ParseError with the offending line number.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

Graph complement(const Graph& g);

// Disjoint union of g and h (h relabeled to n_g+1..n_g+n_h) plus every
// cross pair.
Graph join(const Graph& g, const Graph& h);

// Subgraph induced by w, relabeled to 1..|w|; vertex_map[i-1] is the parent
// vertex of new vertex i.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertex_map;
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w);

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph petersen_graph();
Graph disjoint_edges(int k);  // 1-regular graph on 2k vertices

// A direction for every edge of a graph. toward_v[i] directs edges()[i]
// from u to v when true, from v to u when false.
class Orientation {
public:
  Orientation() = default;
  Orientation(Graph graph, std::vector<bool> toward_v);

  const Graph& graph() const { return graph_; }
  int head(int edge_index) const;
  int tail(int edge_index) const;
  int out_degree(int u) const { return out_deg_[u - 1]; }
  int in_degree(int u) const { return in_deg_[u - 1]; }
  int max_out_degree() const;
  int max_in_degree() const;
  std::vector<int> in_edges(int u) const;  // ascending edge indices
  Orientation reversed() const;

private:
  Graph graph_;
  std::vector<bool> toward_v_;
  std::vector<int> out_deg_, in_deg_;
};

}  // namespace keymesh
