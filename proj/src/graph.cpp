#include "lextor/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace lextor {

namespace {

std::uint64_t edge_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

}  // namespace

Graph Graph::from_edge_list(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  Graph g;
  g.n_ = n;
  g.adjacency_.resize(static_cast<size_t>(n));
  g.edges_.reserve(edges.size());
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (!seen.insert(edge_key(u, v)).second)
      throw std::invalid_argument("duplicate edge in input");
    g.adjacency_[static_cast<size_t>(u)].push_back(v);
    g.adjacency_[static_cast<size_t>(v)].push_back(u);
    g.edges_.emplace_back(u, v);
  }
  g.m_ = static_cast<int>(g.edges_.size());
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u == v) return false;
  const auto& a = degree(u) <= degree(v) ? adjacency_[static_cast<size_t>(u)]
                                         : adjacency_[static_cast<size_t>(v)];
  VertexId other = degree(u) <= degree(v) ? v : u;
  return std::find(a.begin(), a.end(), other) != a.end();
}

const std::vector<std::string>& g10_vertex_names() {
  static const std::vector<std::string> names = {"x", "b", "y", "u", "z",
                                                 "q", "w", "r", "v", "a"};
  return names;
}

Graph fixture_g10() {
  // x=0 b=1 y=2 u=3 z=4 q=5 w=6 r=7 v=8 a=9
  static const std::vector<Edge> edges = {
      {0, 1},                                                  // xb
      {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8},  // b*
      {4, 9},                                                  // za
      {2, 3}, {2, 4}, {2, 5}, {2, 6},                          // y*
      {3, 7},                                                  // ur
      {5, 8},                                                  // qv
      {3, 4}, {3, 5}, {3, 6},                                  // u*
      {5, 6},                                                  // qw
  };
  return Graph::from_edge_list(10, edges);
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<VertexId>& s) {
  std::vector<int> new_id(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t i = 0; i < s.size(); ++i) {
    VertexId v = s[i];
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("subgraph member out of range");
    if (new_id[static_cast<size_t>(v)] != -1)
      throw std::invalid_argument("repeated subgraph member");
    new_id[static_cast<size_t>(v)] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (VertexId u : s) {
    for (VertexId w : g.neighbors(u)) {
      int nu = new_id[static_cast<size_t>(u)];
      int nw = new_id[static_cast<size_t>(w)];
      if (nw >= 0 && nu < nw) edges.emplace_back(nu, nw);
    }
  }
  InducedSubgraph out;
  out.graph = Graph::from_edge_list(static_cast<int>(s.size()), edges);
  out.to_original = s;
  return out;
}

Orientation induced_orientation(const Graph& g, std::span<const VertexId> order) {
  if (static_cast<int>(order.size()) != g.vertex_count())
    throw std::invalid_argument("order must cover every vertex");
  std::vector<int> pos(order.size(), -1);
  for (size_t i = 0; i < order.size(); ++i) {
    VertexId v = order[i];
    if (v < 0 || v >= g.vertex_count() || pos[static_cast<size_t>(v)] != -1)
      throw std::invalid_argument("order is not a permutation of the vertices");
    pos[static_cast<size_t>(v)] = static_cast<int>(i);
  }
  Orientation o;
  o.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) {
    if (pos[static_cast<size_t>(u)] < pos[static_cast<size_t>(v)])
      o.emplace_back(u, v);
    else
      o.emplace_back(v, u);
  }
  return o;
}

bool is_connected(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<VertexId> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v)) {
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

}  // namespace lextor
