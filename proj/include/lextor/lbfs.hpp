#pragma once

#include <cstdint>
#include <vector>

#include "lextor/graph.hpp"

namespace lextor {

/// Result of a lexicographic breadth-first search.
struct LbfsResult {
  std::vector<VertexId> sigma;           // visit order
  std::vector<int> position;             // inverse of sigma
  std::vector<std::vector<int>> labels;  // final label per vertex; label
                                         // values are n - t + 1 for the
                                         // labelling step t, so total label
                                         // length over all vertices equals m
  std::uint64_t ops = 0;                 // elementary partition operations
};

/// LBFS beginning at `start`. Ties are broken toward the lowest vertex
/// index among the vertices of maximal label. Runs in O(n + m).
LbfsResult lbfs_from(const Graph& g, VertexId start);

/// LBFS starting from vertex 0.
LbfsResult lbfs(const Graph& g);

/// Literal label-comparison implementation with the same tie-break.
/// O(n^2 * n) time; the oracle for lbfs_from.
LbfsResult naive_lbfs_from(const Graph& g, VertexId start);
LbfsResult naive_lbfs(const Graph& g);

}  // namespace lextor
