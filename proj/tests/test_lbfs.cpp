#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lextor/graph.hpp"
#include "lextor/lbfs.hpp"
#include "lextor/oracle.hpp"
#include "test_util.hpp"

using namespace lextor;
using testutil::g10_ids;

namespace {

void check_equal(const LbfsResult& a, const LbfsResult& b) {
  REQUIRE(a.sigma == b.sigma);
  REQUIRE(a.position == b.position);
  REQUIRE(a.labels == b.labels);
}

void check_label_invariants(const Graph& g, const LbfsResult& r) {
  size_t total = 0;
  for (const auto& lab : r.labels) total += lab.size();
  CHECK(total == static_cast<size_t>(g.edge_count()));
  // a later vertex's final label may only outrank an earlier one's by
  // extending it: ties at selection time grow afterwards
  for (size_t i = 1; i < r.sigma.size(); ++i) {
    const auto& prev = r.labels[static_cast<size_t>(r.sigma[i - 1])];
    const auto& cur = r.labels[static_cast<size_t>(r.sigma[i])];
    if (std::lexicographical_compare(prev.begin(), prev.end(), cur.begin(),
                                     cur.end())) {
      REQUIRE(prev.size() < cur.size());
      CHECK(std::equal(prev.begin(), prev.end(), cur.begin()));
    }
  }
}

}  // namespace

TEST_CASE("g10 search order") {
  Graph g = fixture_g10();
  auto r = lbfs_from(g, 0);
  CHECK(r.sigma == g10_ids("xbyuzqwrva"));
  CHECK(lbfs(g).sigma == r.sigma);
  check_label_invariants(g, r);
  CHECK(oracle::is_valid_lbfs_order(g, r.sigma));
}

TEST_CASE("small cases") {
  Graph k1 = Graph::from_edge_list(1, {});
  CHECK(lbfs_from(k1, 0).sigma == std::vector<VertexId>{0});

  Graph p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(lbfs_from(p4, 0).sigma == std::vector<VertexId>{0, 1, 2, 3});

  Graph k2 = Graph::from_edge_list(2, {{0, 1}});
  CHECK(lbfs(k2).sigma == std::vector<VertexId>{0, 1});

  Graph e3 = Graph::from_edge_list(3, {});
  auto r = lbfs(e3);
  CHECK(r.sigma == std::vector<VertexId>{0, 1, 2});
  for (const auto& lab : r.labels) CHECK(lab.empty());

  CHECK_THROWS_AS(lbfs(Graph::from_edge_list(0, {})), std::invalid_argument);
  CHECK_THROWS_AS(lbfs_from(k2, 5), std::invalid_argument);
}

TEST_CASE("fast matches naive on g10 and exhaustive small starts") {
  Graph g10 = fixture_g10();
  check_equal(lbfs_from(g10, 0), naive_lbfs_from(g10, 0));
  Graph p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  for (int s = 0; s < 4; ++s) check_equal(lbfs_from(p4, s), naive_lbfs_from(p4, s));
}

TEST_CASE("fast matches naive on random graphs") {
  int cases = 0;
  for (int it = 0; it < 520; ++it) {
    int n = 1 + it % 50;
    double density = (it % 10) / 10.0;
    Graph g = testutil::random_graph(n, density, 555 + 13 * it);
    if (n <= 10) {
      for (int s = 0; s < n; ++s) {
        check_equal(lbfs_from(g, s), naive_lbfs_from(g, s));
        ++cases;
      }
    } else {
      int s = it % n;
      auto fast = lbfs_from(g, s);
      check_equal(fast, naive_lbfs_from(g, s));
      check_label_invariants(g, fast);
      CHECK(oracle::is_valid_lbfs_order(g, fast.sigma));
      ++cases;
    }
  }
  CHECK(cases >= 500);
}

TEST_CASE("instrumented cost stays linear") {
  for (int n : {50, 200, 800}) {
    Graph g = testutil::random_graph(n, 0.1, 42);
    auto r = lbfs_from(g, 0);
    CHECK(r.ops <= 10ULL * static_cast<std::uint64_t>(n + g.edge_count() + 1));
  }
}
