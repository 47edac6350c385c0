#include <doctest.h>

#include <algorithm>

#include "keymesh/errors.hpp"
#include "keymesh/oracle.hpp"
#include "keymesh/scheme.hpp"
#include "keymesh/scheme_io.hpp"
#include "test_support.hpp"

using namespace keymesh;
using keymesh::testing::Rng;

TEST_CASE("scheme construction enforces the f and W invariants") {
  Graph g(3, {{1, 2}, {2, 3}});
  CHECK_THROWS_AS(IosScheme(g, 0, {1, 1}, {}), std::invalid_argument);
  CHECK_THROWS_AS(IosScheme(g, 2, {1, 1}, {{}, {}}), std::invalid_argument);  // 2 unused
  CHECK_THROWS_AS(IosScheme(g, 1, {1}, {{}}), std::invalid_argument);         // missing edge
  CHECK_THROWS_AS(IosScheme(g, 1, {1, 1}, {{4}}), std::invalid_argument);     // holder range
  CHECK_THROWS_AS(IosScheme(g, 1, {1, 1}, {{2, 2}}), std::invalid_argument);  // duplicate holder
}

TEST_CASE("key graphs partition the running example") {
  auto kgs = key_graphs(testing::example1_scheme());
  REQUIRE(kgs.size() == 3);
  CHECK(kgs[0].edges == std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}});
  CHECK(kgs[0].vertices == VertexSet{1, 2, 3, 4});
  CHECK(kgs[1].edges == std::vector<Edge>{{1, 5}, {2, 5}, {4, 5}});
  CHECK(kgs[1].vertices == VertexSet{1, 2, 4, 5});
  CHECK(kgs[2].edges == std::vector<Edge>{{2, 3}, {3, 4}});
  CHECK(kgs[2].vertices == VertexSet{2, 3, 4});

  size_t edge_total = 0;
  for (const KeyGraph& kg : kgs) edge_total += kg.edges.size();
  CHECK(edge_total == 8);
}

TEST_CASE("singleton assignments give one key graph per edge") {
  Graph g(3, {{1, 2}, {2, 3}});
  IosScheme s(g, 2, {1, 2}, {{}, {}});
  auto kgs = key_graphs(s);
  REQUIRE(kgs.size() == 2);
  CHECK(kgs[0].edges.size() == 1);
  CHECK(kgs[1].edges.size() == 1);
}

TEST_CASE("classification of the running example") {
  IosScheme s = testing::example1_scheme();
  auto t1 = classify_key_graph(s, 1);
  CHECK(t1.kind == KeyGraphType::Kind::Type1);
  CHECK(t1.centre == 1);
  CHECK(classify_key_graph(s, 2).centre == 5);
  CHECK(classify_key_graph(s, 3).centre == 3);
}

TEST_CASE("single edge with both holders is type 2") {
  Graph g(2, {{1, 2}});
  IosScheme s(g, 1, {1}, {{1, 2}});
  auto type = classify_key_graph(s, 1);
  CHECK(type.kind == KeyGraphType::Kind::Type2);
  CHECK(type.edge == Edge{1, 2});
  CHECK(verify_secure(s).secure());
}

TEST_CASE("empty holder set is type 0 whatever the shape") {
  Graph g(3, {{1, 2}, {1, 3}, {2, 3}});
  IosScheme s(g, 1, {1, 1, 1}, {{}});
  CHECK(classify_key_graph(s, 1).kind == KeyGraphType::Kind::Type0);
  CHECK(verify_secure(s).secure());
}

TEST_CASE("non-star with one holder violates L5") {
  IosScheme s = testing::l5_path_scheme();
  auto type = classify_key_graph(s, 1);
  REQUIRE(type.kind == KeyGraphType::Kind::Invalid);
  CHECK(type.violation->lemma == Lemma::L5);
  CHECK(type.violation->offender == 1);
  CHECK(type.violation->victim == Edge{2, 3});
  CHECK(type.violation->message() == "key graph 1: Lemma L5: not a star centred at 1");

  auto verdict = verify_secure(s);
  REQUIRE(verdict.violations.size() == 1);
  CHECK(verdict.violations[0].lemma == Lemma::L5);
}

TEST_CASE("holder off the key graph violates L-1 first") {
  Graph g(4, {{1, 2}, {3, 4}});
  IosScheme s(g, 2, {1, 2}, {{1, 4}, {3, 4}});  // 4 holds R_1 but sits on {3,4}
  auto type = classify_key_graph(s, 1);
  REQUIRE(type.kind == KeyGraphType::Kind::Invalid);
  CHECK(type.violation->lemma == Lemma::LMinus1);
  CHECK(type.violation->offender == 4);
  CHECK(type.violation->victim == Edge{1, 2});
}

TEST_CASE("three holders violate L4") {
  Graph g(3, {{1, 2}, {1, 3}, {2, 3}});
  IosScheme s(g, 1, {1, 1, 1}, {{1, 2, 3}});
  auto verdict = verify_secure(s);
  REQUIRE(verdict.violations.size() == 1);
  CHECK(verdict.violations[0].lemma == Lemma::L4);
}

TEST_CASE("two holders with extra edges violate L3") {
  Graph g(3, {{1, 2}, {1, 3}});
  IosScheme s(g, 1, {1, 1}, {{1, 2}});
  auto verdict = verify_secure(s);
  REQUIRE(verdict.violations.size() == 1);
  CHECK(verdict.violations[0].lemma == Lemma::L3);
  CHECK(verdict.violations[0].offender == 2);
  CHECK(verdict.violations[0].victim == Edge{1, 3});
}

TEST_CASE("storage of the running example") {
  StorageProfile p = storage_profile(testing::example1_scheme());
  CHECK(p.s == std::vector<int>{2, 3, 2, 3, 1});
  CHECK(p.total == 11);
  CHECK(p.max == 3);
  REQUIRE(p.star_ios);
  CHECK(p.c == std::vector<int>{1, 0, 1, 0, 1});
  CHECK(p.l == std::vector<int>{1, 3, 1, 3, 0});
}

TEST_CASE("storage of tiny schemes") {
  Graph single(2, {{1, 2}});
  StorageProfile type1 = storage_profile(IosScheme(single, 1, {1}, {{1}}));
  CHECK(type1.total == 2);
  CHECK(type1.max == 1);
  CHECK(type1.star_ios);

  StorageProfile type2 = storage_profile(IosScheme(single, 1, {1}, {{1, 2}}));
  CHECK(type2.s == std::vector<int>{1, 1});
  CHECK(type2.total == 2);
  CHECK_FALSE(type2.star_ios);

  Graph triangle(3, {{1, 2}, {1, 3}, {2, 3}});
  StorageProfile type0 = storage_profile(IosScheme(triangle, 1, {1, 1, 1}, {{}}));
  CHECK(type0.s == std::vector<int>{2, 2, 2});
  CHECK(type0.total == 6);
  CHECK_FALSE(type0.star_ios);
}

TEST_CASE("star transform on tiny schemes") {
  Graph single(2, {{1, 2}});
  IosScheme star = to_star_ios(IosScheme(single, 1, {1}, {{1, 2}}));
  auto type = classify_key_graph(star, 1);
  CHECK(type.kind == KeyGraphType::Kind::Type1);
  CHECK(type.centre == 1);  // smaller endpoint
  CHECK(storage_profile(star).s == std::vector<int>{1, 1});

  Graph triangle(3, {{1, 2}, {1, 3}, {2, 3}});
  IosScheme split = to_star_ios(IosScheme(triangle, 1, {1, 1, 1}, {{}}));
  CHECK(split.t() == 3);
  for (int j = 1; j <= 3; ++j)
    CHECK(classify_key_graph(split, j).kind == KeyGraphType::Kind::Type1);
  CHECK(storage_profile(split).s == std::vector<int>{2, 2, 2});
}

TEST_CASE("star transform leaves a star scheme alone") {
  IosScheme s = testing::example1_scheme();
  CHECK(to_star_ios(s) == s);
}

TEST_CASE("star transform refuses insecure schemes") {
  CHECK_THROWS_AS(to_star_ios(testing::l5_path_scheme()), DomainError);
}

TEST_CASE("star transform preserves per-vertex storage") {
  Rng rng(40);
  int rounds = 0;
  while (rounds < 100) {
    Graph g = testing::random_graph(rng, rng.next(2, 8), 0.5);
    if (g.edge_count() == 0) continue;
    ++rounds;
    IosScheme s = testing::random_secure_scheme(rng, g);
    REQUIRE(verify_secure(s).secure());
    IosScheme star = to_star_ios(s);
    CHECK(verify_secure(star).secure());
    for (int j = 1; j <= star.t(); ++j)
      CHECK(classify_key_graph(star, j).kind == KeyGraphType::Kind::Type1);
    CHECK(storage_profile(star).s == storage_profile(s).s);
  }
}

TEST_CASE("from_orientation builds one star per fed vertex") {
  Graph c4 = cycle_graph(4);
  // 1->2->3->4->1: every vertex receives exactly one edge.
  Orientation cyc(c4, {true, false, true, true});
  IosScheme s = from_orientation(cyc);
  CHECK(s.t() == 4);
  CHECK(verify_secure(s).secure());
  StorageProfile p = storage_profile(s);
  CHECK(p.s == std::vector<int>{2, 2, 2, 2});
  CHECK(p.total == 8);  // eps + number of stars

  Graph star_graph(4, {{1, 2}, {1, 3}, {1, 4}});  // leaves point at 1
  IosScheme hub = from_orientation(Orientation(star_graph, {false, false, false}));
  CHECK(hub.t() == 1);
  CHECK(storage_profile(hub).s == std::vector<int>{1, 1, 1, 1});

  CHECK_THROWS_AS(from_orientation(Orientation(empty_graph(2), {})), DomainError);
}

TEST_CASE("from_orientation can reproduce the running example") {
  Graph g = testing::example1_graph();
  std::vector<bool> toward_v(g.edge_count());
  auto direct_into = [&](int u, int v, int target) {
    int i = *g.edge_index(u, v);
    toward_v[i] = g.edge(i).v == target;
  };
  direct_into(1, 2, 1);
  direct_into(1, 3, 1);
  direct_into(1, 4, 1);
  direct_into(1, 5, 5);
  direct_into(2, 5, 5);
  direct_into(4, 5, 5);
  direct_into(2, 3, 3);
  direct_into(3, 4, 3);
  IosScheme rebuilt = from_orientation(Orientation(g, toward_v));
  CHECK(testing::equivalent_up_to_renumbering(rebuilt, testing::example1_scheme()));
}

TEST_CASE("from_orientation storage follows the degree formula") {
  Rng rng(41);
  int rounds = 0;
  while (rounds < 60) {
    Graph g = testing::random_graph(rng, rng.next(2, 9), 0.5);
    if (g.edge_count() == 0) continue;
    ++rounds;
    std::vector<bool> dirs(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) dirs[i] = rng.chance(0.5);
    Orientation o(g, dirs);
    IosScheme s = from_orientation(o);
    CHECK(verify_secure(s).secure());
    StorageProfile p = storage_profile(s);
    long long leaf_sum = 0;
    for (int u = 1; u <= g.vertex_count(); ++u) {
      CHECK(p.storage(u) == (o.in_degree(u) > 0 ? 1 : 0) + o.out_degree(u));
      leaf_sum += p.leaves(u);
    }
    CHECK(leaf_sum == g.edge_count());
    CHECK(p.total == g.edge_count() + std::count_if(p.c.begin(), p.c.end(),
                                                    [](int c) { return c > 0; }));
  }
}

TEST_CASE("verifier agrees with the simulated adversary") {
  Rng rng(42);
  for (int round = 0; round < 300; ++round) {
    Graph g = testing::random_graph_nonempty(rng, rng.next(2, 5), 0.6);
    IosScheme s = testing::random_scheme(rng, g, 3);
    SecurityVerdict verdict = verify_secure(s);
    BruteSecurityVerdict brute = brute_secure(s);
    CHECK(verdict.secure() == brute.secure);
  }
}

TEST_CASE("scheme documents round-trip canonically") {
  IosScheme s = testing::example1_scheme();
  std::string doc = write_scheme(s);
  IosScheme back = read_scheme(doc);
  CHECK(back == s);
  CHECK(write_scheme(back) == doc);

  // Reader accepts scrambled order; writer restores the canonical one.
  std::string scrambled = R"({
    "w": [[1], [5], [3]],
    "t": 3,
    "f": [[3,4,3],[2,3,3],[4,5,2],[2,5,2],[1,5,2],[1,4,1],[1,3,1],[1,2,1]],
    "edges": [[4,5],[3,4],[2,5],[2,3],[1,5],[1,4],[1,3],[1,2]],
    "n": 5
  })";
  CHECK(read_scheme(scrambled) == s);
  CHECK(write_scheme(read_scheme(scrambled)) == doc);
}

TEST_CASE("random schemes round-trip") {
  Rng rng(43);
  for (int round = 0; round < 50; ++round) {
    Graph g = testing::random_graph_nonempty(rng, rng.next(2, 7), 0.5);
    IosScheme s = testing::random_scheme(rng, g, 4);
    CHECK(read_scheme(write_scheme(s)) == s);
  }
}

TEST_CASE("scheme reader rejects malformed documents") {
  CHECK_THROWS_AS(read_scheme(""), ParseError);
  CHECK_THROWS_AS(read_scheme("{\"n\": 2}"), ParseError);
  CHECK_THROWS_AS(read_scheme(R"({"n":2,"edges":[[1,2]],"t":1,"f":[],"w":[[]]})"), ParseError);
  CHECK_THROWS_AS(read_scheme(R"({"n":2,"edges":[[1,2]],"t":1,"f":[[1,3,1]],"w":[[]]})"),
                  ParseError);
  CHECK_THROWS_AS(read_scheme(R"({"n":2,"edges":[[1,2]],"t":2,"f":[[1,2,1]],"w":[[],[]]})"),
                  ParseError);
  std::string doc = write_scheme(testing::example1_scheme());
  CHECK_THROWS_AS(read_scheme(doc.substr(0, doc.size() / 2)), ParseError);  // truncated
}
