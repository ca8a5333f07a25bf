#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lextor/graph.hpp"
#include "lextor/oracle.hpp"
#include "test_util.hpp"

using namespace lextor;
using namespace lextor::oracle;
using testutil::g10_ids;

namespace {
Graph p4() { return Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}}); }
Graph c5() {
  return Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}
Graph k3() { return Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}}); }
}  // namespace

TEST_CASE("verify_transitive") {
  Graph g10 = fixture_g10();
  auto order = g10_ids("xzqwrvyuab");
  CHECK(verify_transitive(g10, induced_orientation(g10, order)));

  Graph p = p4();
  Orientation chain = {{0, 1}, {1, 2}, {2, 3}};
  CHECK(!verify_transitive(p, chain));  // 0->2 missing

  Graph k = k3();
  Orientation cyclic = {{0, 1}, {1, 2}, {2, 0}};
  CHECK(!verify_transitive(k, cyclic));
  Orientation acyclic = {{0, 1}, {1, 2}, {0, 2}};
  CHECK(verify_transitive(k, acyclic));

  CHECK_THROWS_AS(verify_transitive(p, Orientation{{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(verify_transitive(p, Orientation{{0, 1}, {1, 2}, {1, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      verify_transitive(p, Orientation{{0, 1}, {1, 2}, {0, 3}}),  // 0-3 not an edge
      std::invalid_argument);
}

TEST_CASE("enumerate_transitive_orientations") {
  auto set_p4 = enumerate_transitive_orientations(p4());
  CHECK(set_p4.size() == 2);
  auto set_c5 = enumerate_transitive_orientations(c5());
  CHECK(set_c5.size() == 0);
  auto set_k3 = enumerate_transitive_orientations(k3());
  CHECK(set_k3.size() == 6);
  CHECK_THROWS_AS(enumerate_transitive_orientations(testutil::random_graph(10, 0.5, 1)),
                  std::invalid_argument);
}

TEST_CASE("orientation set closed under reversal") {
  for (int it = 0; it < 40; ++it) {
    Graph g = testutil::random_graph(2 + it % 6, 0.5, 321 + it);
    auto set = enumerate_transitive_orientations(g);
    for (const auto& o : set.orientations) {
      Orientation rev;
      for (auto [a, b] : o) rev.emplace_back(b, a);
      CHECK(set.contains(g, rev));
    }
  }
}

TEST_CASE("prime comparability graphs have exactly two orientations") {
  int found = 0;
  for (int it = 0; it < 400 && found < 25; ++it) {
    Graph g = testutil::random_graph(4 + it % 4, 0.5, 9000 + it);
    if (!is_connected(g) || !is_prime_bruteforce(g)) continue;
    auto set = enumerate_transitive_orientations(g);
    if (set.size() == 0) continue;  // prime but not comparability
    ++found;
    CHECK(set.size() == 2);
  }
  CHECK(found >= 10);
}

TEST_CASE("is_prime_bruteforce") {
  CHECK(is_prime_bruteforce(fixture_g10()));
  CHECK(!is_prime_bruteforce(k3()));
  CHECK(is_prime_bruteforce(p4()));
  CHECK_THROWS_AS(is_prime_bruteforce(testutil::random_graph(15, 0.5, 3)),
                  std::invalid_argument);
}

TEST_CASE("is_comparability_bruteforce") {
  Graph bip = Graph::from_edge_list(5, {{0, 3}, {1, 3}, {1, 4}, {2, 4}});
  CHECK(is_comparability_bruteforce(bip));
  CHECK(!is_comparability_bruteforce(c5()));
  CHECK_THROWS_AS(is_comparability_bruteforce(testutil::random_graph(10, 0.5, 4)),
                  std::invalid_argument);
}

TEST_CASE("is_valid_lbfs_order") {
  Graph g10 = fixture_g10();
  CHECK(is_valid_lbfs_order(g10, g10_ids("xbyuzqwrva")));
  CHECK(!is_valid_lbfs_order(g10, g10_ids("xaybuzqwrv")));
  Graph k2 = Graph::from_edge_list(2, {{0, 1}});
  CHECK(is_valid_lbfs_order(k2, std::vector<VertexId>{0, 1}));
  CHECK(is_valid_lbfs_order(k2, std::vector<VertexId>{1, 0}));
  CHECK(!is_valid_lbfs_order(k2, std::vector<VertexId>{0, 0}));
}
