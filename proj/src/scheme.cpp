#include "keymesh/scheme.hpp"

#include <algorithm>
#include <stdexcept>

#include "keymesh/errors.hpp"

namespace keymesh {

IosScheme::IosScheme(Graph graph, int t, std::vector<int> f, std::vector<VertexSet> w_sets)
    : graph_(std::move(graph)), t_(t), f_(std::move(f)), w_sets_(std::move(w_sets)) {
  if (t_ < 1) throw std::invalid_argument("a scheme needs at least one key graph");
  if (static_cast<int>(f_.size()) != graph_.edge_count())
    throw std::invalid_argument("f must assign an index to every edge");
  std::vector<bool> hit(t_, false);
  for (int j : f_) {
    if (j < 1 || j > t_) throw std::invalid_argument("f value " + std::to_string(j) + " outside 1..t");
    hit[j - 1] = true;
  }
  for (int j = 1; j <= t_; ++j)
    if (!hit[j - 1]) throw std::invalid_argument("f is not surjective: index " + std::to_string(j) + " unused");
  if (static_cast<int>(w_sets_.size()) != t_)
    throw std::invalid_argument("expected exactly t holder sets");
  for (VertexSet& w : w_sets_) {
    std::sort(w.begin(), w.end());
    if (std::adjacent_find(w.begin(), w.end()) != w.end())
      throw std::invalid_argument("duplicate vertex in a holder set");
    for (int u : w)
      if (u < 1 || u > graph_.vertex_count())
        throw std::invalid_argument("holder vertex " + std::to_string(u) + " out of range");
  }
}

bool IosScheme::holds_secret(int u, int j) const {
  const VertexSet& w = w_sets_[j - 1];
  return std::binary_search(w.begin(), w.end(), u);
}

std::vector<KeyGraph> key_graphs(const IosScheme& scheme) {
  std::vector<KeyGraph> result(scheme.t());
  for (int j = 1; j <= scheme.t(); ++j) result[j - 1].index = j;
  for (int i = 0; i < scheme.graph().edge_count(); ++i) {
    KeyGraph& kg = result[scheme.f_of(i) - 1];
    const Edge& e = scheme.graph().edge(i);
    kg.edges.push_back(e);
    kg.vertices.push_back(e.u);
    kg.vertices.push_back(e.v);
  }
  for (KeyGraph& kg : result) {
    std::sort(kg.vertices.begin(), kg.vertices.end());
    kg.vertices.erase(std::unique(kg.vertices.begin(), kg.vertices.end()), kg.vertices.end());
  }
  return result;
}

std::string_view lemma_name(Lemma lemma) {
  switch (lemma) {
    case Lemma::LMinus1: return "L-1";
    case Lemma::L1: return "L1";
    case Lemma::L2: return "L2";
    case Lemma::L3: return "L3";
    case Lemma::L4: return "L4";
    case Lemma::L5: return "L5";
  }
  return "?";
}

std::string Violation::message() const {
  return "key graph " + std::to_string(key_graph) + ": Lemma " + std::string(lemma_name(lemma)) +
         ": " + detail;
}

namespace {

KeyGraphType invalid(Violation v) {
  KeyGraphType t;
  t.kind = KeyGraphType::Kind::Invalid;
  t.violation = std::move(v);
  return t;
}

bool on_edge(int u, const Edge& e) { return u == e.u || u == e.v; }

}  // namespace

KeyGraphType classify_key_graph(const IosScheme& scheme, int j) {
  if (j < 1 || j > scheme.t()) throw std::invalid_argument("key graph index out of range");
  KeyGraph kg;
  for (int i = 0; i < scheme.graph().edge_count(); ++i)
    if (scheme.f_of(i) == j) kg.edges.push_back(scheme.graph().edge(i));
  for (const Edge& e : kg.edges) {
    kg.vertices.push_back(e.u);
    kg.vertices.push_back(e.v);
  }
  std::sort(kg.vertices.begin(), kg.vertices.end());
  kg.vertices.erase(std::unique(kg.vertices.begin(), kg.vertices.end()), kg.vertices.end());
  const VertexSet& w = scheme.w(j);

  // A holder off the key graph can compute every key of the key graph.
  for (int holder : w)
    if (!std::binary_search(kg.vertices.begin(), kg.vertices.end(), holder))
      return invalid({j, Lemma::LMinus1, holder, kg.edges.front(),
                      "secret holder " + std::to_string(holder) + " lies outside the key graph"});

  if (w.size() > 2) {
    // Two vertices fit on one edge; a third holder is always foreign to it.
    const Edge& e = kg.edges.front();
    int offender = 0;
    for (int holder : w)
      if (!on_edge(holder, e)) {
        offender = holder;
        break;
      }
    return invalid({j, Lemma::L4, offender, e,
                    std::to_string(w.size()) + " secret holders; at most 2 allowed"});
  }

  if (w.size() == 2) {
    Edge pair{w[0], w[1]};
    if (kg.edges.size() == 1 && kg.edges.front() == pair) {
      KeyGraphType t;
      t.kind = KeyGraphType::Kind::Type2;
      t.edge = pair;
      return t;
    }
    for (const Edge& e : kg.edges)
      for (int holder : w)
        if (!on_edge(holder, e))
          return invalid({j, Lemma::L3, holder, e,
                          "two secret holders but the key graph is not the single edge " +
                              to_string(pair)});
    // Both holders on every edge forces the single edge {w0,w1}, handled above.
    throw std::logic_error("unreachable: two holders, no violating edge");
  }

  if (w.size() == 1) {
    int centre = w[0];
    for (const Edge& e : kg.edges)
      if (!on_edge(centre, e))
        return invalid({j, Lemma::L5, centre, e, "not a star centred at " + std::to_string(centre)});
    KeyGraphType t;
    t.kind = KeyGraphType::Kind::Type1;
    t.centre = centre;
    return t;
  }

  KeyGraphType t;
  t.kind = KeyGraphType::Kind::Type0;
  return t;
}

SecurityVerdict verify_secure(const IosScheme& scheme) {
  SecurityVerdict verdict;
  for (int j = 1; j <= scheme.t(); ++j) {
    KeyGraphType type = classify_key_graph(scheme, j);
    if (type.kind == KeyGraphType::Kind::Invalid) verdict.violations.push_back(*type.violation);
  }
  return verdict;
}

StorageProfile storage_profile(const IosScheme& scheme) {
  const Graph& g = scheme.graph();
  StorageProfile profile;
  profile.s.assign(g.vertex_count(), 0);

  // One secret per W membership; otherwise one key per incident edge.
  for (int j = 1; j <= scheme.t(); ++j)
    for (int u : scheme.w(j)) ++profile.s[u - 1];
  for (int i = 0; i < g.edge_count(); ++i) {
    int j = scheme.f_of(i);
    const Edge& e = g.edge(i);
    if (!scheme.holds_secret(e.u, j)) ++profile.s[e.u - 1];
    if (!scheme.holds_secret(e.v, j)) ++profile.s[e.v - 1];
  }
  for (int x : profile.s) {
    profile.total += x;
    profile.max = std::max(profile.max, x);
  }

  std::vector<int> centre_of(scheme.t() + 1, 0);
  profile.star_ios = true;
  for (int j = 1; j <= scheme.t() && profile.star_ios; ++j) {
    KeyGraphType type = classify_key_graph(scheme, j);
    if (type.kind == KeyGraphType::Kind::Type1)
      centre_of[j] = type.centre;
    else
      profile.star_ios = false;
  }
  if (profile.star_ios) {
    profile.c.assign(g.vertex_count(), 0);
    profile.l.assign(g.vertex_count(), 0);
    for (int j = 1; j <= scheme.t(); ++j) ++profile.c[centre_of[j] - 1];
    for (int i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edge(i);
      int leaf = centre_of[scheme.f_of(i)] == e.u ? e.v : e.u;
      ++profile.l[leaf - 1];
    }
  }
  return profile;
}

IosScheme to_star_ios(const IosScheme& scheme) {
  SecurityVerdict verdict = verify_secure(scheme);
  if (!verdict.secure())
    throw DomainError("refusing to transform insecure scheme: " + verdict.violations.front().message());

  struct Star {
    std::vector<int> edge_indices;
    int centre;
  };
  std::vector<Star> kept;
  std::vector<Star> split_off;

  std::vector<std::vector<int>> edges_of(scheme.t() + 1);
  for (int i = 0; i < scheme.graph().edge_count(); ++i) edges_of[scheme.f_of(i)].push_back(i);

  for (int j = 1; j <= scheme.t(); ++j) {
    KeyGraphType type = classify_key_graph(scheme, j);
    switch (type.kind) {
      case KeyGraphType::Kind::Type1:
        kept.push_back({edges_of[j], type.centre});
        break;
      case KeyGraphType::Kind::Type2:
        // Either endpoint may keep the secret; take the smaller.
        kept.push_back({edges_of[j], std::min(type.edge.u, type.edge.v)});
        break;
      case KeyGraphType::Kind::Type0:
        for (int i : edges_of[j]) split_off.push_back({{i}, scheme.graph().edge(i).u});
        break;
      case KeyGraphType::Kind::Invalid:
        break;  // unreachable: verified secure above
    }
  }

  kept.insert(kept.end(), split_off.begin(), split_off.end());
  std::vector<int> f(scheme.graph().edge_count(), 0);
  std::vector<VertexSet> w_sets;
  for (int j = 1; j <= static_cast<int>(kept.size()); ++j) {
    for (int i : kept[j - 1].edge_indices) f[i] = j;
    w_sets.push_back({kept[j - 1].centre});
  }
  return IosScheme(scheme.graph(), static_cast<int>(kept.size()), std::move(f), std::move(w_sets));
}

IosScheme from_orientation(const Orientation& o) {
  const Graph& g = o.graph();
  if (g.edge_count() == 0) throw DomainError("graph has no edges: no scheme exists");

  std::vector<int> f(g.edge_count(), 0);
  std::vector<VertexSet> w_sets;
  int t = 0;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    std::vector<int> in = o.in_edges(v);
    if (in.empty()) continue;
    ++t;
    for (int i : in) f[i] = t;
    w_sets.push_back({v});
  }
  return IosScheme(g, t, std::move(f), std::move(w_sets));
}

}  // namespace keymesh
