#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lextor {

/// Dense vertex identifier in [0, n). Stable for the lifetime of a Graph.
using VertexId = int;

using Edge = std::pair<VertexId, VertexId>;

/// One direction chosen per undirected edge.
using Orientation = std::vector<Edge>;

/// Immutable simple undirected graph.
///
/// Neighbor order within each adjacency list is the first-appearance order of
/// the input edge list; all deterministic tie-breaking downstream is defined
/// relative to it. Instances are safe to share across threads once built.
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on self-loops, duplicate edges, or
  /// out-of-range endpoints.
  static Graph from_edge_list(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return adjacency_[static_cast<size_t>(v)];
  }
  int degree(VertexId v) const {
    return static_cast<int>(adjacency_[static_cast<size_t>(v)].size());
  }

  /// Linear scan of the smaller adjacency list.
  bool has_edge(VertexId u, VertexId v) const;

  /// Edges in construction order, endpoints as given.
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<Edge> edges_;
};

/// Ten-vertex reference graph used throughout the tests: vertices named
/// x,b,y,u,z,q,w,r,v,a map to ids 0..9 in that order; 19 edges.
Graph fixture_g10();

/// Names of the fixture's vertices, indexed by id.
const std::vector<std::string>& g10_vertex_names();

struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> to_original;  // new id -> original id
};

/// Subgraph induced by `s`; ids are remapped densely in the order of `s`.
/// Throws std::invalid_argument on out-of-range or repeated members.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<VertexId>& s);

/// Orientation induced by a total order: each edge points at the endpoint
/// that appears later. `order` must be a permutation of the vertices.
Orientation induced_orientation(const Graph& g, std::span<const VertexId> order);

bool is_connected(const Graph& g);

}  // namespace lextor
