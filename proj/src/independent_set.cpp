#include "keymesh/independent_set.hpp"

#include <algorithm>
#include <cstdint>

#include "keymesh/errors.hpp"

namespace keymesh {

namespace {

// Fixed-width bitset over vertex indices 0..n-1.
class Bits {
public:
  explicit Bits(int n) : words_((n + 63) / 64, 0) {}

  void set(int i) { words_[i >> 6] |= 1ULL << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }

  Bits minus(const Bits& o) const {
    Bits r = *this;
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }

  int intersection_count(const Bits& o) const {
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i)
      c += __builtin_popcountll(words_[i] & o.words_[i]);
    return c;
  }

  template <typename F>
  void for_each(F f) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int i = static_cast<int>(w << 6) + __builtin_ctzll(bits);
        bits &= bits - 1;
        f(i);
      }
    }
  }

private:
  std::vector<std::uint64_t> words_;
};

VertexSet greedy_maximal_set(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<bool> removed(n, false);
  std::vector<int> degree(n);
  for (int u = 1; u <= n; ++u) degree[u - 1] = g.degree(u);

  VertexSet chosen;
  for (;;) {
    // Lowest remaining degree, ties to the smallest id.
    int pick = 0;
    for (int u = 1; u <= n; ++u)
      if (!removed[u - 1] && (pick == 0 || degree[u - 1] < degree[pick - 1])) pick = u;
    if (pick == 0) break;
    chosen.push_back(pick);
    removed[pick - 1] = true;
    for (const Graph::Incidence& inc : g.incident(pick)) {
      if (removed[inc.neighbor - 1]) continue;
      removed[inc.neighbor - 1] = true;
      for (const Graph::Incidence& inc2 : g.incident(inc.neighbor))
        if (!removed[inc2.neighbor - 1]) --degree[inc2.neighbor - 1];
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

class ExactSolver {
public:
  explicit ExactSolver(const Graph& g) : g_(g), n_(g.vertex_count()) {
    for (int u = 1; u <= n_; ++u) {
      Bits open(n_);
      for (const Graph::Incidence& inc : g.incident(u)) open.set(inc.neighbor - 1);
      adj_.push_back(open);
      open.set(u - 1);
      closed_.push_back(open);
    }
  }

  VertexSet solve() {
    best_ = greedy_maximal_set(g_);
    Bits all(n_);
    for (int i = 0; i < n_; ++i) all.set(i);
    std::vector<int> current;
    branch(all, current);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

private:
  void branch(Bits cand, std::vector<int>& current) {
    const size_t entry = current.size();

    // Candidates with at most one neighbour left can always be taken.
    for (;;) {
      int take = -1;
      cand.for_each([&](int i) {
        if (take < 0 && adj_[i].intersection_count(cand) <= 1) take = i;
      });
      if (take < 0) break;
      current.push_back(take + 1);
      cand = cand.minus(closed_[take]);
    }

    int remaining = cand.count();
    if (static_cast<int>(current.size()) + remaining > static_cast<int>(best_.size())) {
      if (remaining == 0) {
        best_ = current;
      } else {
        // Branch on the highest-degree candidate: include it, then exclude it.
        int pick = -1, pick_deg = -1;
        cand.for_each([&](int i) {
          int d = adj_[i].intersection_count(cand);
          if (d > pick_deg) {
            pick_deg = d;
            pick = i;
          }
        });
        current.push_back(pick + 1);
        branch(cand.minus(closed_[pick]), current);
        current.pop_back();
        Bits excluded = cand;
        excluded.reset(pick);
        branch(std::move(excluded), current);
      }
    }
    current.resize(entry);
  }

  const Graph& g_;
  int n_;
  std::vector<Bits> adj_;
  std::vector<Bits> closed_;
  VertexSet best_;
};

}  // namespace

IndependentSet max_independent_set(const Graph& g, MisMode mode, int exact_cap) {
  if (mode == MisMode::Greedy) return {greedy_maximal_set(g), false};
  if (g.vertex_count() > exact_cap)
    throw ExactCapExceeded("exact independent set refused: n = " + std::to_string(g.vertex_count()) +
                           " exceeds cap " + std::to_string(exact_cap) +
                           " (use greedy mode or raise the cap)");
  ExactSolver solver(g);
  return {solver.solve(), true};
}

}  // namespace keymesh
