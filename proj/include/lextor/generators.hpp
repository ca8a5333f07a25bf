#pragma once

#include <cstdint>

#include "lextor/graph.hpp"

namespace lextor {

/// Deterministic: identical configs produce byte-identical edge lists.
struct GeneratorConfig {
  int n = 0;
  double density = 0.5;  // probability in [0, 1]
  std::uint64_t seed = 0;
};

/// Comparability graph by construction: a random DAG over a random vertex
/// order, transitively closed, directions dropped. The generating order is a
/// witness linear extension. Guarded to n <= 4096 (the closure is dense).
Graph random_poset_graph(const GeneratorConfig& cfg);

/// Connected prime comparability graph found by rejection sampling over
/// random_poset_graph with reseeded tries. Requires 4 <= n <= 14; throws
/// std::runtime_error if the try budget runs out.
Graph random_prime_comparability(const GeneratorConfig& cfg);

/// Path on n >= 4 vertices, edges (i, i+1).
Graph path_graph(int n);

/// Cycle on an even number of vertices, n >= 6.
Graph even_cycle(int n);

/// Connected bipartite graph: parts 0..ceil(n/2)-1 and the rest, joined by a
/// zigzag spanning path plus independent random cross edges at `density`.
/// Comparability via the all-left-to-right orientation; primality is not
/// guaranteed, callers reseed when the pipeline rejects an instance.
Graph random_bipartite(const GeneratorConfig& cfg);

}  // namespace lextor
