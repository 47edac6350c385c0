#include "keymesh/oracle.hpp"

#include <algorithm>

#include "keymesh/errors.hpp"

namespace keymesh {

namespace {

void check_edge_budget(const Graph& g, const OracleBudget& budget) {
  if (g.edge_count() > budget.max_edges || g.edge_count() > 30)
    throw DomainError("oracle budget exceeded: " + std::to_string(g.edge_count()) + " edges > " +
                      std::to_string(std::min(budget.max_edges, 30)));
}

}  // namespace

int brute_alpha(const Graph& g, OracleBudget budget) {
  const int n = g.vertex_count();
  if (n > budget.max_vertices || n > 30)
    throw DomainError("oracle budget exceeded: " + std::to_string(n) + " vertices > " +
                      std::to_string(std::min(budget.max_vertices, 30)));
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (const Edge& e : g.edges())
      if ((mask >> (e.u - 1) & 1) && (mask >> (e.v - 1) & 1)) {
        independent = false;
        break;
      }
    if (independent) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

int brute_mmo(const Graph& g, OracleBudget budget) {
  check_edge_budget(g, budget);
  const int eps = g.edge_count();
  const int n = g.vertex_count();
  int best = eps == 0 ? 0 : eps;
  std::vector<int> out_deg(n);
  for (std::uint32_t mask = 0; mask < (1u << eps); ++mask) {
    std::fill(out_deg.begin(), out_deg.end(), 0);
    int worst = 0;
    for (int i = 0; i < eps; ++i) {
      int tail = (mask >> i & 1) ? g.edge(i).u : g.edge(i).v;
      worst = std::max(worst, ++out_deg[tail - 1]);
    }
    best = std::min(best, worst);
  }
  return best;
}

StorageOptima brute_storage_optima(const Graph& g, OracleBudget budget) {
  check_edge_budget(g, budget);
  const int eps = g.edge_count();
  const int n = g.vertex_count();
  StorageOptima optima{static_cast<long long>(n) * (eps + 1), n == 0 ? 0 : eps + 1};
  std::vector<int> out_deg(n), in_deg(n);
  for (std::uint32_t mask = 0; mask < (1u << eps); ++mask) {
    std::fill(out_deg.begin(), out_deg.end(), 0);
    std::fill(in_deg.begin(), in_deg.end(), 0);
    for (int i = 0; i < eps; ++i) {
      int tail = (mask >> i & 1) ? g.edge(i).u : g.edge(i).v;
      int head = tail == g.edge(i).u ? g.edge(i).v : g.edge(i).u;
      ++out_deg[tail - 1];
      ++in_deg[head - 1];
    }
    long long total = 0;
    int max_s = 0;
    for (int u = 0; u < n; ++u) {
      int s = (in_deg[u] > 0 ? 1 : 0) + out_deg[u];
      total += s;
      max_s = std::max(max_s, s);
    }
    optima.min_total = std::min(optima.min_total, total);
    optima.min_max = std::min(optima.min_max, max_s);
  }
  return optima;
}

BruteSecurityVerdict brute_secure(const IosScheme& scheme) {
  const Graph& g = scheme.graph();
  for (int w = 1; w <= g.vertex_count(); ++w) {
    // Everything w stores: R_j whenever w is in W_j (even off the key
    // graph), and derived keys only for incident edges. A key for a
    // non-incident edge is computable exactly when w holds that secret.
    for (int i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edge(i);
      if (w == e.u || w == e.v) continue;
      if (scheme.holds_secret(w, scheme.f_of(i))) return {false, w, e};
    }
  }
  return {true, 0, {0, 0}};
}

}  // namespace keymesh
