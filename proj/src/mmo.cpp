#include "keymesh/mmo.hpp"

#include <algorithm>
#include <climits>
#include <queue>
#include <stdexcept>

#include "keymesh/errors.hpp"

namespace keymesh {

namespace {

// Plain Edmonds-Karp. Arcs are scanned in insertion order, so with arcs
// added in ascending node order every augmenting path is the
// lexicographically first shortest one and the result is deterministic.
class FlowNetwork {
public:
  explicit FlowNetwork(int nodes) : adj_(nodes) {}

  int add_arc(int from, int to, int capacity) {
    int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, capacity});
    arcs_.push_back({from, 0});
    adj_[from].push_back(id);
    adj_[to].push_back(id + 1);
    return id;
  }

  int max_flow(int source, int sink) {
    int total = 0;
    std::vector<int> via(adj_.size());
    for (;;) {
      std::fill(via.begin(), via.end(), -1);
      via[source] = -2;
      std::queue<int> frontier;
      frontier.push(source);
      while (!frontier.empty() && via[sink] == -1) {
        int v = frontier.front();
        frontier.pop();
        for (int a : adj_[v])
          if (arcs_[a].capacity > 0 && via[arcs_[a].to] == -1) {
            via[arcs_[a].to] = a;
            frontier.push(arcs_[a].to);
          }
      }
      if (via[sink] == -1) return total;
      int push = INT_MAX;
      for (int v = sink; v != source; v = arcs_[via[v] ^ 1].to)
        push = std::min(push, arcs_[via[v]].capacity);
      for (int v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
        arcs_[via[v]].capacity -= push;
        arcs_[via[v] ^ 1].capacity += push;
      }
      total += push;
    }
  }

  int residual(int id) const { return arcs_[id].capacity; }

private:
  struct Arc {
    int to;
    int capacity;
  };

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace

int mmo_lower_bound(const Graph& g) {
  if (g.vertex_count() < 1) throw DomainError("lower bound needs at least one vertex");
  return (g.edge_count() + g.vertex_count() - 1) / g.vertex_count();
}

std::optional<Orientation> orient_with_max_outdegree(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("outdegree bound must be nonnegative");
  const int eps = g.edge_count();
  const int n = g.vertex_count();
  if (eps == 0) return Orientation(g, {});

  // source = 0, edge nodes 1..eps, vertex nodes eps+1..eps+n, sink last.
  // Every edge sends one unit into one of its endpoints; a vertex passes at
  // most k units to the sink, bounding its outdegree.
  const int source = 0, sink = eps + n + 1;
  FlowNetwork net(eps + n + 2);
  std::vector<int> to_u(eps);
  for (int i = 0; i < eps; ++i) net.add_arc(source, 1 + i, 1);
  for (int i = 0; i < eps; ++i) {
    to_u[i] = net.add_arc(1 + i, eps + g.edge(i).u, 1);
    net.add_arc(1 + i, eps + g.edge(i).v, 1);
  }
  for (int v = 1; v <= n; ++v) net.add_arc(eps + v, sink, k);

  if (net.max_flow(source, sink) != eps) return std::nullopt;

  std::vector<bool> toward_v(eps);
  for (int i = 0; i < eps; ++i)
    toward_v[i] = net.residual(to_u[i]) == 0;  // u absorbed the unit: u is the tail
  return Orientation(g, std::move(toward_v));
}

MmoResult mmo(const Graph& g) {
  if (g.edge_count() == 0) return {0, Orientation(g, {})};
  int lo = mmo_lower_bound(g);
  int hi = g.max_degree();  // any orientation stays within the degree
  while (lo < hi) {
    int mid = lo + (hi - lo) / 2;
    if (orient_with_max_outdegree(g, mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return {lo, *orient_with_max_outdegree(g, lo)};
}

}  // namespace keymesh
