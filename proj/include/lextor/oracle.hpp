#pragma once

#include <span>
#include <vector>

#include "lextor/graph.hpp"

namespace lextor::oracle {

// Brute-force reference implementations, deliberately independent of the
// linear-time code paths they are used to validate. All enumeration entry
// points carry hard size guards and throw std::invalid_argument beyond them.

/// True iff `o` is a transitive orientation of g's edges: whenever a->b and
/// b->c are present, so is a->c. Throws if `o` does not orient exactly E(g).
bool verify_transitive(const Graph& g, const Orientation& o);

/// All transitive orientations of g, deduplicated.
struct OrientationSet {
  std::vector<Orientation> orientations;  // each in g.edges() order
  bool contains(const Graph& g, const Orientation& o) const;
  size_t size() const { return orientations.size(); }
};

/// Enumerates every total vertex order (n <= 9) and collects the distinct
/// transitive orientations they induce. Every transitive orientation is a
/// partial order, hence induced by one of its topological orders, so the
/// sweep is exhaustive.
OrientationSet enumerate_transitive_orientations(const Graph& g);

/// True iff no vertex subset M with 1 < |M| < n has every outside vertex
/// adjacent to all of M or none of M. Guarded to n <= 14.
bool is_prime_bruteforce(const Graph& g);

/// Guarded to n <= 9.
bool is_comparability_bruteforce(const Graph& g);

/// Replays the lexicographic labelling over `order` and checks that each
/// vertex had a maximal label when selected (any tie-break accepted).
bool is_valid_lbfs_order(const Graph& g, std::span<const VertexId> order);

}  // namespace lextor::oracle
