#include "keymesh/optimizer.hpp"

#include <algorithm>

#include "keymesh/balanced_orientation.hpp"
#include "keymesh/errors.hpp"
#include "keymesh/mmo.hpp"

namespace keymesh {

namespace {

void require_edges(const Graph& g) {
  if (g.edge_count() < 1) throw DomainError("graph has no edges: nothing to optimize");
}

IndependentSet best_independent_set(const Graph& g, int exact_cap) {
  try {
    return max_independent_set(g, MisMode::Exact, exact_cap);
  } catch (const ExactCapExceeded&) {
    return max_independent_set(g, MisMode::Greedy, exact_cap);
  }
}

}  // namespace

TotalStorageBound total_storage_optimum(const Graph& g, int exact_cap) {
  require_edges(g);
  IndependentSet mis = best_independent_set(g, exact_cap);
  long long value = static_cast<long long>(g.vertex_count()) + g.edge_count() -
                    static_cast<long long>(mis.members.size());
  return {value, mis.exact};
}

OptimizationReport min_total_storage_scheme(const Graph& g, int exact_cap) {
  require_edges(g);
  IndependentSet mis = best_independent_set(g, exact_cap);
  std::vector<bool> in_set(g.vertex_count() + 1, false);
  for (int v : mis.members) in_set[v] = true;

  // Edges leave the independent set; the rest point at the larger id. Every
  // set member keeps indegree 0, and (the set being maximal) every other
  // vertex receives at least one edge, so exactly n - |set| stars arise.
  std::vector<bool> toward_v(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (in_set[e.u])
      toward_v[i] = true;
    else if (in_set[e.v])
      toward_v[i] = false;
    else
      toward_v[i] = true;
  }
  IosScheme scheme = from_orientation(Orientation(g, std::move(toward_v)));
  StorageProfile profile = storage_profile(scheme);
  return {Objective::Total, profile.total, std::move(scheme),
          TotalCertificate{mis.members, mis.exact}};
}

MaxStorageOptimum max_storage_optimum(const Graph& g) {
  require_edges(g);
  MmoResult mg = mmo(g);
  VertexSet w;
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (g.degree(v) > mg.value) w.push_back(v);
  InducedSubgraph h = induced_subgraph(g, w);
  int mmo_h = mmo(h.graph).value;  // 0 when h has no edges
  bool equality = mmo_h < mg.value;
  return {equality ? mg.value : mg.value + 1, MaxCertificate{mg.value, w, mmo_h, equality}};
}

OptimizationReport min_max_storage_scheme(const Graph& g) {
  require_edges(g);
  MmoResult mg = mmo(g);
  VertexSet w;
  std::vector<bool> in_w(g.vertex_count() + 1, false);
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (g.degree(v) > mg.value) {
      w.push_back(v);
      in_w[v] = true;
    }
  InducedSubgraph h = induced_subgraph(g, w);
  MmoResult mh = mmo(h.graph);

  Orientation oriented = mg.witness;
  if (mh.value < mg.value) {
    // Orient inside-W edges by the witness on H, pull every crossing edge
    // into W, and point the rest at the larger id. High-degree vertices
    // then store at most 1 + MMO(H) items and the rest at most their
    // degree, so the maximum storage meets MMO(G) exactly.
    std::vector<int> label(g.vertex_count() + 1, 0);
    for (int i = 0; i < static_cast<int>(h.vertex_map.size()); ++i) label[h.vertex_map[i]] = i + 1;
    std::vector<bool> toward_v(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edge(i);
      if (in_w[e.u] && in_w[e.v]) {
        int h_index = *h.graph.edge_index(label[e.u], label[e.v]);
        toward_v[i] = h.vertex_map[mh.witness.head(h_index) - 1] == e.v;
      } else if (in_w[e.v]) {
        toward_v[i] = true;
      } else if (in_w[e.u]) {
        toward_v[i] = false;
      } else {
        toward_v[i] = true;
      }
    }
    oriented = Orientation(g, std::move(toward_v));
  }

  IosScheme scheme = from_orientation(oriented);
  StorageProfile profile = storage_profile(scheme);
  return {Objective::Max, profile.max, std::move(scheme),
          MaxCertificate{mg.value, w, mh.value, mh.value < mg.value}};
}

OptimizationReport euler_upper_bound_scheme(const Graph& g) {
  require_edges(g);
  IosScheme scheme = from_orientation(balanced_orientation(g));
  StorageProfile profile = storage_profile(scheme);
  int d = g.max_degree();
  int bound = d % 2 == 1 ? (d + 3) / 2 : (d + 2) / 2;
  return {Objective::Euler, profile.max, std::move(scheme), EulerCertificate{d, bound}};
}

}  // namespace keymesh
