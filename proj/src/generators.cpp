#include "lextor/generators.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "lextor/oracle.hpp"

namespace lextor {

namespace {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  double unit() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
  std::uint64_t below(std::uint64_t k) {
    // multiply-shift; bias is irrelevant here and the result is stable
    // across platforms, unlike std::uniform_int_distribution
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(eng()) * k) >> 64);
  }
};

std::uint64_t pair_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

void check_density(double d) {
  if (!(d >= 0.0 && d <= 1.0))
    throw std::invalid_argument("density must be in [0, 1]");
}

}  // namespace

Graph random_poset_graph(const GeneratorConfig& cfg) {
  if (cfg.n < 0 || cfg.n > 4096)
    throw std::invalid_argument("random_poset_graph: n out of range [0, 4096]");
  check_density(cfg.density);
  int n = cfg.n;
  Rng rng(cfg.seed);
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[static_cast<size_t>(i)],
              perm[static_cast<size_t>(rng.below(static_cast<std::uint64_t>(i) + 1))]);

  // successors by position, then transitive closure with bitsets
  size_t words = (static_cast<size_t>(n) + 63) / 64;
  std::vector<std::uint64_t> reach(static_cast<size_t>(n) * words, 0);
  std::vector<std::vector<int>> direct(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.unit() < cfg.density) direct[static_cast<size_t>(i)].push_back(j);
  for (int i = n - 1; i >= 0; --i) {
    auto* row = &reach[static_cast<size_t>(i) * words];
    for (int j : direct[static_cast<size_t>(i)]) {
      row[static_cast<size_t>(j) / 64] |= std::uint64_t{1} << (j % 64);
      const auto* other = &reach[static_cast<size_t>(j) * words];
      for (size_t w = 0; w < words; ++w) row[w] |= other[w];
    }
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    const auto* row = &reach[static_cast<size_t>(i) * words];
    for (int j = i + 1; j < n; ++j) {
      if (row[static_cast<size_t>(j) / 64] & (std::uint64_t{1} << (j % 64)))
        edges.emplace_back(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph random_prime_comparability(const GeneratorConfig& cfg) {
  if (cfg.n < 4 || cfg.n > 14)
    throw std::invalid_argument("random_prime_comparability: n out of range [4, 14]");
  check_density(cfg.density);
  constexpr int kBudget = 50000;
  for (int attempt = 0; attempt < kBudget; ++attempt) {
    GeneratorConfig sub = cfg;
    sub.seed = cfg.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt + 1);
    Graph g = random_poset_graph(sub);
    if (is_connected(g) && oracle::is_prime_bruteforce(g)) return g;
  }
  throw std::runtime_error(
      "random_prime_comparability: rejection budget exhausted, try another seed");
}

Graph path_graph(int n) {
  if (n < 4) throw std::invalid_argument("path_graph: n must be at least 4");
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(n) - 1);
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, edges);
}

Graph even_cycle(int n) {
  if (n < 6 || n % 2 != 0)
    throw std::invalid_argument("even_cycle: n must be even and at least 6");
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(n));
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 1, 0);
  return Graph::from_edge_list(n, edges);
}

Graph random_bipartite(const GeneratorConfig& cfg) {
  if (cfg.n < 2) throw std::invalid_argument("random_bipartite: n must be at least 2");
  check_density(cfg.density);
  int n = cfg.n;
  int left = (n + 1) / 2;
  int right = n - left;
  auto left_id = [&](int i) { return i; };
  auto right_id = [&](int i) { return left + i; };

  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> used;
  // zigzag spanning path: l0 r0 l1 r1 ...
  for (int k = 0; k + 1 < n; ++k) {
    int a = (k % 2 == 0) ? left_id(k / 2) : right_id(k / 2);
    int b = ((k + 1) % 2 == 0) ? left_id((k + 1) / 2) : right_id((k + 1) / 2);
    edges.emplace_back(a, b);
    used.insert(pair_key(a, b));
  }
  Rng rng(cfg.seed);
  if (cfg.density > 0.0 && right > 0) {
    // geometric skips across the left x right pair space, one log per edge
    std::uint64_t total =
        static_cast<std::uint64_t>(left) * static_cast<std::uint64_t>(right);
    auto emit = [&](std::uint64_t idx) {
      int i = static_cast<int>(idx / static_cast<std::uint64_t>(right));
      int j = static_cast<int>(idx % static_cast<std::uint64_t>(right));
      int a = left_id(i), b = right_id(j);
      if (used.insert(pair_key(a, b)).second) edges.emplace_back(a, b);
    };
    if (cfg.density >= 1.0) {
      for (std::uint64_t idx = 0; idx < total; ++idx) emit(idx);
    } else {
      double log1mp = std::log1p(-cfg.density);
      std::uint64_t idx = 0;
      bool first = true;
      while (true) {
        double u = rng.unit();
        auto gap = static_cast<std::uint64_t>(std::floor(std::log1p(-u) / log1mp));
        idx += gap + (first ? 0 : 1);
        first = false;
        if (idx >= total) break;
        emit(idx);
      }
    }
  }
  return Graph::from_edge_list(n, edges);
}

}  // namespace lextor
