#include <doctest.h>

#include "keymesh/mmo.hpp"
#include "keymesh/oracle.hpp"
#include "test_support.hpp"

using namespace keymesh;
using keymesh::testing::Rng;

TEST_CASE("lower bound is ceil(eps/n)") {
  CHECK(mmo_lower_bound(testing::example1_graph()) == 2);  // ceil(8/5)
  CHECK(mmo_lower_bound(testing::k5_join_11()) == 5);      // ceil(65/16)
  CHECK(mmo_lower_bound(empty_graph(4)) == 0);
  CHECK(mmo_lower_bound(complete_graph(3)) == 1);
}

TEST_CASE("bounded-outdegree orientation feasibility") {
  auto cyc = orient_with_max_outdegree(cycle_graph(4), 1);
  REQUIRE(cyc.has_value());
  CHECK(cyc->max_out_degree() == 1);

  CHECK_FALSE(orient_with_max_outdegree(complete_graph(4), 1).has_value());

  auto ex1 = orient_with_max_outdegree(testing::example1_graph(), 2);
  REQUIRE(ex1.has_value());
  CHECK(ex1->max_out_degree() <= 2);

  auto zero = orient_with_max_outdegree(empty_graph(3), 0);
  REQUIRE(zero.has_value());
  CHECK(zero->graph().edge_count() == 0);
}

TEST_CASE("feasibility is monotone in k") {
  Rng rng(30);
  for (int round = 0; round < 40; ++round) {
    Graph g = testing::random_graph(rng, rng.next(2, 9), 0.5);
    bool seen_feasible = false;
    for (int k = 0; k <= g.max_degree(); ++k) {
      bool ok = orient_with_max_outdegree(g, k).has_value();
      if (seen_feasible) CHECK(ok);
      if (ok) seen_feasible = true;
    }
    CHECK(seen_feasible);
  }
}

TEST_CASE("mmo on named graphs") {
  CHECK(mmo(testing::example1_graph()).value == 2);
  CHECK(mmo(cycle_graph(4)).value == 1);
  CHECK(mmo(testing::k5_join_11()).value == 5);
  CHECK(mmo(complete_graph(5)).value == 2);
  CHECK(mmo(empty_graph(3)).value == 0);
  CHECK(mmo(disjoint_edges(3)).value == 1);
}

TEST_CASE("witness attains the value and reverses into max indegree") {
  Rng rng(31);
  for (int round = 0; round < 40; ++round) {
    Graph g = testing::random_graph(rng, rng.next(1, 10), 0.4);
    MmoResult result = mmo(g);
    CHECK(result.witness.max_out_degree() == result.value);
    CHECK(result.witness.reversed().max_in_degree() == result.value);
    CHECK(mmo_lower_bound(g) <= result.value);
    CHECK(result.value <= g.max_degree());
  }
}

TEST_CASE("mmo matches the brute-force sweep") {
  Rng rng(32);
  int rounds = 0;
  while (rounds < 50) {
    Graph g = testing::random_graph(rng, rng.next(2, 8), 0.5);
    if (g.edge_count() > 16) continue;
    ++rounds;
    CHECK(mmo(g).value == brute_mmo(g));
  }
}
