#include "keymesh/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "keymesh/errors.hpp"

namespace keymesh {

std::string to_string(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  for (Edge& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 1 || e.v > n_)
      throw std::invalid_argument("edge endpoint out of range: " + to_string(e));
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) throw std::invalid_argument("duplicate edge " + to_string(*dup));
  edges_ = std::move(edges);

  adj_.resize(n_);
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    adj_[edges_[i].u - 1].push_back({edges_[i].v, i});
    adj_[edges_[i].v - 1].push_back({edges_[i].u, i});
  }
  for (auto& list : adj_)
    std::sort(list.begin(), list.end(),
              [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
}

void Graph::check_vertex(int u) const {
  if (u < 1 || u > n_) throw DomainError("vertex " + std::to_string(u) + " out of range 1.." + std::to_string(n_));
}

bool Graph::has_edge(int u, int v) const { return edge_index(u, v).has_value(); }

std::optional<int> Graph::edge_index(int u, int v) const {
  if (u == v) return std::nullopt;
  if (u > v) std::swap(u, v);
  Edge key{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

const std::vector<Graph::Incidence>& Graph::incident(int u) const {
  check_vertex(u);
  return adj_[u - 1];
}

int Graph::degree(int u) const { return static_cast<int>(incident(u).size()); }

int Graph::max_degree() const {
  int d = 0;
  for (const auto& list : adj_) d = std::max(d, static_cast<int>(list.size()));
  return d;
}

std::vector<VertexSet> Graph::connected_components() const {
  std::vector<VertexSet> components;
  std::vector<bool> seen(n_, false);
  for (int start = 1; start <= n_; ++start) {
    if (seen[start - 1]) continue;
    VertexSet comp;
    std::vector<int> stack{start};
    seen[start - 1] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (const Incidence& inc : adj_[v - 1]) {
        if (!seen[inc.neighbor - 1]) {
          seen[inc.neighbor - 1] = true;
          stack.push_back(inc.neighbor);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

namespace {

// Splits a line into whitespace-separated integer tokens; returns false on
// any non-integer token.
bool parse_ints(std::string_view line, std::vector<long>& out) {
  out.clear();
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j) return false;
    out.push_back(value);
    i = j;
  }
  return true;
}

bool blank_or_comment(std::string_view line) {
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') continue;
    return c == '#';
  }
  return true;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  int line_no = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError("line " + std::to_string(line_no) + ": " + msg);
  };

  long n = -1, m = -1;
  std::vector<Edge> edges;
  std::vector<long> nums;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (blank_or_comment(line)) continue;
    if (!parse_ints(line, nums)) fail("malformed line: expected integers");

    if (n < 0) {
      if (nums.size() != 2) fail("malformed header: expected \"n m\"");
      if (nums[0] < 0 || nums[1] < 0) fail("malformed header: counts must be nonnegative");
      n = nums[0];
      m = nums[1];
      continue;
    }
    if (static_cast<long>(edges.size()) == m) fail("unexpected content after " + std::to_string(m) + " edges");
    if (nums.size() != 2) fail("malformed line: expected \"u v\"");
    long u = nums[0], v = nums[1];
    if (u == v) fail("self-loop at vertex " + std::to_string(u));
    if (u < 1 || u > n || v < 1 || v > n)
      fail("endpoint out of range: {" + std::to_string(u) + "," + std::to_string(v) + "} with n = " + std::to_string(n));
    if (u > v) fail("edge endpoints must satisfy u < v");
    Edge e{static_cast<int>(u), static_cast<int>(v)};
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) fail("duplicate edge " + to_string(e));
    edges.push_back(e);
  }
  if (line_no == 0) line_no = 1;
  if (n < 0) fail("missing header line \"n m\"");
  if (static_cast<long>(edges.size()) < m)
    fail("unexpected end of input: expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 1; u <= g.vertex_count(); ++u)
    for (int v = u + 1; v <= g.vertex_count(); ++v)
      if (!g.has_edge(u, v)) edges.push_back({u, v});
  return Graph(g.vertex_count(), std::move(edges));
}

Graph join(const Graph& g, const Graph& h) {
  int ng = g.vertex_count(), nh = h.vertex_count();
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : h.edges()) edges.push_back({e.u + ng, e.v + ng});
  for (int u = 1; u <= ng; ++u)
    for (int v = 1; v <= nh; ++v) edges.push_back({u, v + ng});
  return Graph(ng + nh, std::move(edges));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w) {
  VertexSet members = w;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (int u : members)
    if (u < 1 || u > g.vertex_count())
      throw DomainError("vertex " + std::to_string(u) + " out of range 1.." + std::to_string(g.vertex_count()));

  std::vector<int> label(g.vertex_count() + 1, 0);
  for (int i = 0; i < static_cast<int>(members.size()); ++i) label[members[i]] = i + 1;

  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (label[e.u] != 0 && label[e.v] != 0) edges.push_back({label[e.u], label[e.v]});
  return {Graph(static_cast<int>(members.size()), std::move(edges)), std::move(members)};
}

Graph empty_graph(int n) { return Graph(n, {}); }

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int u = 1; u < n; ++u) edges.push_back({u, u + 1});
  edges.push_back({1, n});
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 1; u < n; ++u) edges.push_back({u, u + 1});
  return Graph(n, std::move(edges));
}

Graph petersen_graph() {
  // Outer 5-cycle 1..5, spokes to 6..10, inner pentagram.
  std::vector<Edge> edges{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5},
                          {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10},
                          {6, 8}, {8, 10}, {7, 10}, {7, 9}, {6, 9}};
  return Graph(10, std::move(edges));
}

Graph disjoint_edges(int k) {
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) edges.push_back({2 * i - 1, 2 * i});
  return Graph(2 * k, std::move(edges));
}

Orientation::Orientation(Graph graph, std::vector<bool> toward_v)
    : graph_(std::move(graph)), toward_v_(std::move(toward_v)) {
  if (static_cast<int>(toward_v_.size()) != graph_.edge_count())
    throw std::invalid_argument("orientation must direct every edge exactly once");
  out_deg_.assign(graph_.vertex_count(), 0);
  in_deg_.assign(graph_.vertex_count(), 0);
  for (int i = 0; i < graph_.edge_count(); ++i) {
    ++out_deg_[tail(i) - 1];
    ++in_deg_[head(i) - 1];
  }
}

int Orientation::head(int edge_index) const {
  const Edge& e = graph_.edge(edge_index);
  return toward_v_[edge_index] ? e.v : e.u;
}

int Orientation::tail(int edge_index) const {
  const Edge& e = graph_.edge(edge_index);
  return toward_v_[edge_index] ? e.u : e.v;
}

int Orientation::max_out_degree() const {
  int d = 0;
  for (int x : out_deg_) d = std::max(d, x);
  return d;
}

int Orientation::max_in_degree() const {
  int d = 0;
  for (int x : in_deg_) d = std::max(d, x);
  return d;
}

std::vector<int> Orientation::in_edges(int u) const {
  std::vector<int> result;
  for (const Graph::Incidence& inc : graph_.incident(u))
    if (head(inc.edge) == u) result.push_back(inc.edge);
  std::sort(result.begin(), result.end());
  return result;
}

Orientation Orientation::reversed() const {
  std::vector<bool> flipped(toward_v_.size());
  for (size_t i = 0; i < toward_v_.size(); ++i) flipped[i] = !toward_v_[i];
  return Orientation(graph_, std::move(flipped));
}

}  // namespace keymesh
