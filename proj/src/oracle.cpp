#include "lextor/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace lextor::oracle {

namespace {

std::uint64_t dir_key(VertexId a, VertexId b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

// Orientation as a bitmask over g.edges(): bit i set when edge i keeps its
// stored (u, v) direction.
std::uint64_t orientation_mask(const Graph& g, const Orientation& o) {
  const auto& edges = g.edges();
  if (o.size() != edges.size())
    throw std::invalid_argument("orientation does not match the edge set");
  std::unordered_set<std::uint64_t> dirs;
  dirs.reserve(o.size() * 2);
  for (const auto& [a, b] : o) dirs.insert(dir_key(a, b));
  std::uint64_t mask = 0;
  for (size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    bool fwd = dirs.count(dir_key(u, v)) > 0;
    bool bwd = dirs.count(dir_key(v, u)) > 0;
    if (fwd == bwd)
      throw std::invalid_argument("orientation does not match the edge set");
    if (fwd) mask |= std::uint64_t{1} << i;
  }
  if (dirs.size() != o.size())
    throw std::invalid_argument("orientation contains duplicate edges");
  return mask;
}

Orientation orientation_from_mask(const Graph& g, std::uint64_t mask) {
  Orientation o;
  o.reserve(g.edges().size());
  for (size_t i = 0; i < g.edges().size(); ++i) {
    auto [u, v] = g.edges()[i];
    if (mask & (std::uint64_t{1} << i))
      o.emplace_back(u, v);
    else
      o.emplace_back(v, u);
  }
  return o;
}

bool mask_is_transitive(const Graph& g, std::uint64_t mask,
                        std::vector<std::vector<VertexId>>& out,
                        std::unordered_set<std::uint64_t>& dirs) {
  for (auto& lst : out) lst.clear();
  dirs.clear();
  for (size_t i = 0; i < g.edges().size(); ++i) {
    auto [u, v] = g.edges()[i];
    if (!(mask & (std::uint64_t{1} << i))) std::swap(u, v);
    out[static_cast<size_t>(u)].push_back(v);
    dirs.insert(dir_key(u, v));
  }
  for (int a = 0; a < g.vertex_count(); ++a) {
    for (VertexId b : out[static_cast<size_t>(a)]) {
      for (VertexId c : out[static_cast<size_t>(b)]) {
        if (!dirs.count(dir_key(a, c))) return false;
      }
    }
  }
  return true;
}

std::vector<std::uint64_t> all_order_masks(const Graph& g) {
  int n = g.vertex_count();
  const auto& edges = g.edges();
  std::vector<VertexId> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> pos(static_cast<size_t>(n));
  std::vector<std::uint64_t> masks;
  do {
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(perm[static_cast<size_t>(i)])] = i;
    std::uint64_t mask = 0;
    for (size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if (pos[static_cast<size_t>(u)] < pos[static_cast<size_t>(v)])
        mask |= std::uint64_t{1} << i;
    }
    masks.push_back(mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return masks;
}

}  // namespace

bool verify_transitive(const Graph& g, const Orientation& o) {
  if (o.size() != g.edges().size())
    throw std::invalid_argument("orientation does not match the edge set");
  std::unordered_set<std::uint64_t> dirs;
  dirs.reserve(o.size() * 2);
  std::vector<std::vector<VertexId>> out(static_cast<size_t>(g.vertex_count()));
  for (const auto& [a, b] : o) {
    if (a < 0 || a >= g.vertex_count() || b < 0 || b >= g.vertex_count() ||
        !g.has_edge(a, b) || !dirs.insert(dir_key(a, b)).second)
      throw std::invalid_argument("orientation does not match the edge set");
    out[static_cast<size_t>(a)].push_back(b);
  }
  for (const auto& [u, v] : g.edges()) {
    if (!dirs.count(dir_key(u, v)) && !dirs.count(dir_key(v, u)))
      throw std::invalid_argument("orientation does not match the edge set");
  }
  for (int a = 0; a < g.vertex_count(); ++a) {
    for (VertexId b : out[static_cast<size_t>(a)]) {
      for (VertexId c : out[static_cast<size_t>(b)]) {
        if (!dirs.count(dir_key(a, c))) return false;
      }
    }
  }
  return true;
}

bool OrientationSet::contains(const Graph& g, const Orientation& o) const {
  std::uint64_t mask = orientation_mask(g, o);
  for (const auto& cand : orientations)
    if (orientation_mask(g, cand) == mask) return true;
  return false;
}

OrientationSet enumerate_transitive_orientations(const Graph& g) {
  if (g.vertex_count() > 9)
    throw std::invalid_argument("enumerate_transitive_orientations: n > 9");
  OrientationSet set;
  std::vector<std::vector<VertexId>> out(static_cast<size_t>(g.vertex_count()));
  std::unordered_set<std::uint64_t> dirs;
  for (std::uint64_t mask : all_order_masks(g)) {
    if (mask_is_transitive(g, mask, out, dirs))
      set.orientations.push_back(orientation_from_mask(g, mask));
  }
  return set;
}

bool is_prime_bruteforce(const Graph& g) {
  int n = g.vertex_count();
  if (n > 14) throw std::invalid_argument("is_prime_bruteforce: n > 14");
  std::vector<std::uint32_t> adj(static_cast<size_t>(n), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<size_t>(u)] |= std::uint32_t{1} << v;
    adj[static_cast<size_t>(v)] |= std::uint32_t{1} << u;
  }
  std::uint32_t full = n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  for (std::uint32_t m = 1; m <= full; ++m) {
    int size = __builtin_popcount(m);
    if (size < 2 || size >= n) continue;
    bool module = true;
    for (int v = 0; v < n && module; ++v) {
      if (m & (std::uint32_t{1} << v)) continue;
      std::uint32_t hit = adj[static_cast<size_t>(v)] & m;
      if (hit != 0 && hit != m) module = false;
    }
    if (module) return false;
  }
  return true;
}

bool is_comparability_bruteforce(const Graph& g) {
  if (g.vertex_count() > 9)
    throw std::invalid_argument("is_comparability_bruteforce: n > 9");
  std::vector<std::vector<VertexId>> out(static_cast<size_t>(g.vertex_count()));
  std::unordered_set<std::uint64_t> dirs;
  for (std::uint64_t mask : all_order_masks(g)) {
    if (mask_is_transitive(g, mask, out, dirs)) return true;
  }
  return false;
}

bool is_valid_lbfs_order(const Graph& g, std::span<const VertexId> order) {
  int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (VertexId v : order) {
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = 1;
  }
  std::vector<std::vector<int>> label(static_cast<size_t>(n));
  std::vector<char> visited(static_cast<size_t>(n), 0);
  for (int step = 0; step < n; ++step) {
    VertexId x = order[static_cast<size_t>(step)];
    for (int v = 0; v < n; ++v) {
      if (visited[static_cast<size_t>(v)]) continue;
      if (std::lexicographical_compare(label[static_cast<size_t>(x)].begin(),
                                       label[static_cast<size_t>(x)].end(),
                                       label[static_cast<size_t>(v)].begin(),
                                       label[static_cast<size_t>(v)].end()))
        return false;  // someone outranked the selected vertex
    }
    visited[static_cast<size_t>(x)] = 1;
    int value = n - (step + 1) + 1;
    for (VertexId y : g.neighbors(x)) {
      if (!visited[static_cast<size_t>(y)])
        label[static_cast<size_t>(y)].push_back(value);
    }
  }
  return true;
}

}  // namespace lextor::oracle
