#include "keymesh/balanced_orientation.hpp"

#include <algorithm>
#include <utility>

namespace keymesh {

namespace {

struct MultiEdge {
  int u, v;
  bool pairing;  // temporary odd-vertex pairing edge, not part of g
};

}  // namespace

Orientation balanced_orientation(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<MultiEdge> medges;
  medges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) medges.push_back({e.u, e.v, false});

  for (const VertexSet& comp : g.connected_components()) {
    VertexSet odd;
    for (int v : comp)
      if (g.degree(v) % 2 == 1) odd.push_back(v);
    for (size_t i = 0; i + 1 < odd.size(); i += 2) medges.push_back({odd[i], odd[i + 1], true});
  }

  // Multigraph adjacency, lowest neighbor first (original edges before a
  // parallel pairing edge, since pairing ids are larger).
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, medge id)
  for (int i = 0; i < static_cast<int>(medges.size()); ++i) {
    adj[medges[i].u - 1].emplace_back(medges[i].v, i);
    adj[medges[i].v - 1].emplace_back(medges[i].u, i);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  std::vector<bool> toward_v(g.edge_count(), false);
  std::vector<bool> used(medges.size(), false);
  std::vector<size_t> next(n, 0);

  for (const VertexSet& comp : g.connected_components()) {
    int start = 0;
    for (int v : comp)
      if (!adj[v - 1].empty()) {
        start = v;
        break;
      }
    if (start == 0) continue;  // isolated vertices

    // Hierholzer: walk greedily, splice sub-circuits on backtrack. The
    // popped sequence is the circuit in reverse.
    std::vector<std::pair<int, int>> stack{{start, -1}};  // (vertex, arriving medge)
    std::vector<std::pair<int, int>> walk;
    while (!stack.empty()) {
      int v = stack.back().first;
      auto& pos = next[v - 1];
      while (pos < adj[v - 1].size() && used[adj[v - 1][pos].second]) ++pos;
      if (pos == adj[v - 1].size()) {
        walk.push_back(stack.back());
        stack.pop_back();
      } else {
        auto [to, id] = adj[v - 1][pos];
        used[id] = true;
        stack.emplace_back(to, id);
      }
    }
    std::reverse(walk.begin(), walk.end());

    for (size_t i = 1; i < walk.size(); ++i) {
      auto [vertex, id] = walk[i];
      if (medges[id].pairing) continue;
      toward_v[id] = (g.edge(id).v == vertex);  // edge enters `vertex`
    }
  }
  return Orientation(g, std::move(toward_v));
}

}  // namespace keymesh
