#include "lextor/orientation.hpp"

#include <algorithm>
#include <memory>
#include <unordered_set>

#include "lextor/lbfs.hpp"

namespace lextor {

namespace {

std::uint64_t edge_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

}  // namespace

namespace {

// Repeated pivoting from {seed}, V - {seed}. Every split of the (current)
// last class keeps the pivot's non-neighbors behind, so the last class is the
// running intersection of the splitting pivots' neighborhoods; when exactly
// one vertex survives, all of its incident edges are directed the same way in
// any transitive orientation. Vertices become eligible as pivots the moment
// they drop out of the last class, which happens to each vertex at most once.
VertexId partition_sweep(const Graph& g, std::uint64_t* ops) {
  int n = g.vertex_count();
  VertexId seed = n - 1;
  std::vector<VertexId> rest;
  rest.reserve(static_cast<size_t>(n) - 1);
  for (int v = 0; v < n; ++v)
    if (v != seed) rest.push_back(v);
  OrderedPartition p({{seed}, rest});
  OrderedPartition::ClassRef last = p.last_class();

  std::vector<char> enqueued(static_cast<size_t>(n), 0);
  std::vector<VertexId> queue = {seed};
  enqueued[static_cast<size_t>(seed)] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    p.pivot(g, queue[head]);
    if (p.last_class() != last) {
      // the old last class now holds exactly the vertices that left
      for (VertexId u : p.class_members(last)) {
        if (!enqueued[static_cast<size_t>(u)]) {
          enqueued[static_cast<size_t>(u)] = 1;
          queue.push_back(u);
        }
      }
      last = p.last_class();
    }
  }
  if (ops) *ops += p.counters().total();
  if (p.class_size(last) != 1)
    throw NotPrimeError(
        "source_vertex: pivoting left a non-trivial module; "
        "the input is not a prime graph");
  return p.class_members(last).front();
}

}  // namespace

VertexId source_vertex(const Graph& g, std::uint64_t* ops) {
  int n = g.vertex_count();
  if (ops) *ops = 0;
  if (n == 0) throw std::invalid_argument("source_vertex: empty graph");
  if (n == 1) {
    if (ops) *ops = 1;
    return 0;
  }
  // The sweep lands on some uniformly-oriented vertex. To make the result
  // reproducible across equally valid choices, extend once from that vertex
  // and canonicalize to the lowest-indexed vertex whose edges are uniform in
  // the computed orientation (a source of it or of its reversal).
  VertexId s = partition_sweep(g, ops);
  LbfsResult r = lbfs_from(g, s);
  SliceTree t = build_slice_tree(r);
  SliceAnnotations a = compute_active_edges(g, t);
  order_connected_vertices(a, r);
  compute_cocomponents(g, t, a);
  LinearExtensionResult res = linear_extension(g, t, a);
  if (ops) *ops += r.ops + t.ops + a.ops + res.counters.refinement;
  std::vector<char> has_in(static_cast<size_t>(n), 0), has_out(static_cast<size_t>(n), 0);
  for (auto [u, v] : res.orientation) {
    has_out[static_cast<size_t>(u)] = 1;
    has_in[static_cast<size_t>(v)] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (!has_in[static_cast<size_t>(v)] || !has_out[static_cast<size_t>(v)]) return v;
  throw NotPrimeError("source_vertex: no uniformly oriented vertex found");
}

namespace {

// Doubly-linked vertex lists with one sentinel each, used for the per-slice
// worklist of connected vertices split into: outside P_y, inside P_y, and
// inside P_y riding under the initial vertex.
struct EligLists {
  std::vector<int> next, prev;
  int out_s, inp_s, inr_s;  // sentinel ids

  explicit EligLists(int n)
      : next(static_cast<size_t>(n) + 3), prev(static_cast<size_t>(n) + 3),
        out_s(n), inp_s(n + 1), inr_s(n + 2) {}

  void reset() {
    for (int s : {out_s, inp_s, inr_s}) {
      next[static_cast<size_t>(s)] = s;
      prev[static_cast<size_t>(s)] = s;
    }
  }
  void push_back(int sent, int v) {
    int t = prev[static_cast<size_t>(sent)];
    next[static_cast<size_t>(t)] = v;
    prev[static_cast<size_t>(v)] = t;
    next[static_cast<size_t>(v)] = sent;
    prev[static_cast<size_t>(sent)] = v;
  }
  void unlink(int v) {
    next[static_cast<size_t>(prev[static_cast<size_t>(v)])] = next[static_cast<size_t>(v)];
    prev[static_cast<size_t>(next[static_cast<size_t>(v)])] = prev[static_cast<size_t>(v)];
  }
  bool empty(int sent) const { return next[static_cast<size_t>(sent)] == sent; }
  int front(int sent) const { return next[static_cast<size_t>(sent)]; }
  // Appends the whole `from` list onto `onto` in O(1).
  void splice_all(int from, int onto) {
    if (empty(from)) return;
    int f = next[static_cast<size_t>(from)];
    int l = prev[static_cast<size_t>(from)];
    int t = prev[static_cast<size_t>(onto)];
    next[static_cast<size_t>(t)] = f;
    prev[static_cast<size_t>(f)] = t;
    next[static_cast<size_t>(l)] = onto;
    prev[static_cast<size_t>(onto)] = l;
    next[static_cast<size_t>(from)] = from;
    prev[static_cast<size_t>(from)] = from;
  }
};

struct InvariantChecker {
  const Graph& g;
  std::unordered_set<std::uint64_t> edges;

  explicit InvariantChecker(const Graph& g_) : g(g_) {
    edges.reserve(g_.edges().size() * 2);
    for (const auto& [u, v] : g_.edges()) edges.insert(edge_key(u, v));
  }

  bool adjacent(VertexId u, VertexId v) const { return edges.count(edge_key(u, v)) > 0; }

  void check_after_slice(const SliceAnnotations& a, const OrderedPartition& p,
                         int slice) const {
    for (const auto& [u, v] : a.active_edges[static_cast<size_t>(slice)]) {
      auto cu = p.class_of(u);
      auto cv = p.class_of(v);
      if (cu == cv)
        throw NotPrimeError("active edge endpoints share a class after their slice");
      for (VertexId w : p.class_members(cv))
        if (!adjacent(u, w))
          throw NotPrimeError("active edge endpoint not universal to the other class");
      for (VertexId w : p.class_members(cu))
        if (!adjacent(v, w))
          throw NotPrimeError("active edge endpoint not universal to the other class");
    }
    int next = slice + 1;
    if (next < static_cast<int>(a.active_edges.size()) &&
        !a.active_edges[static_cast<size_t>(next)].empty()) {
      bool separated = false;
      for (const auto& [u, v] : a.active_edges[static_cast<size_t>(next)]) {
        if (p.class_of(u) != p.class_of(v)) {
          separated = true;
          break;
        }
      }
      if (!separated)
        throw NotPrimeError("no separated seed edge for the next slice");
    }
  }
};

}  // namespace

LinearExtensionResult linear_extension(const Graph& g, const SliceTree& t,
                                       const SliceAnnotations& a,
                                       const ExtensionOptions& opts) {
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("linear_extension: empty graph");
  if (t.slice_count() != n)
    throw std::invalid_argument("linear_extension: slice tree does not match graph");

  LinearExtensionResult res;
  if (n <= 2) {
    res.order = t.sigma;
    res.orientation = induced_orientation(g, res.order);
    if (opts.trace) {
      std::vector<std::vector<VertexId>> classes;
      for (VertexId v : res.order) classes.push_back({v});
      opts.trace->snapshots.assign(static_cast<size_t>(n) + 1, classes);
      opts.trace->pivots.assign(static_cast<size_t>(n), {});
    }
    return res;
  }

  VertexId x0 = t.sigma[0];
  std::vector<VertexId> rest;
  rest.reserve(static_cast<size_t>(n) - 1);
  for (int v = 0; v < n; ++v)
    if (v != x0) rest.push_back(v);
  OrderedPartition P({{x0}, rest});

  EligLists elig(n);
  std::vector<int> elig_stamp(static_cast<size_t>(n), -1);
  std::vector<char> elig_active(static_cast<size_t>(n), 0);
  std::vector<int> alpha_slot(static_cast<size_t>(n), -1);
  std::vector<int> alpha_stamp(static_cast<size_t>(n), -1);
  std::vector<int> ay_stamp(static_cast<size_t>(n), -1);
  std::vector<int> part_of(static_cast<size_t>(n), -1);
  std::vector<int> part_stamp(static_cast<size_t>(n), -1);
  std::vector<std::vector<VertexId>> part_vertices;
  std::vector<char> part_pulled;
  std::vector<VertexId> moved, sset, attach_buf, keep;

  std::unique_ptr<InvariantChecker> checker;
  if (opts.check_invariants) checker = std::make_unique<InvariantChecker>(g);
  if (opts.trace) opts.trace->snapshots.push_back(P.classes());

  for (int i = 0; i < n; ++i) {
    VertexId y = t.sigma[static_cast<size_t>(i)];
    const auto& entries = a.alpha[static_cast<size_t>(i)];
    const auto& conn = a.connected[static_cast<size_t>(i)];
    if (opts.trace) opts.trace->pivots.emplace_back();

    for (size_t slot = 0; slot < entries.size(); ++slot) {
      alpha_slot[static_cast<size_t>(entries[slot].v)] = static_cast<int>(slot);
      alpha_stamp[static_cast<size_t>(entries[slot].v)] = i;
    }
    std::span<const VertexId> alpha_y{};
    if (alpha_stamp[static_cast<size_t>(y)] == i)
      alpha_y = entries[static_cast<size_t>(alpha_slot[static_cast<size_t>(y)])].neighbors;
    for (VertexId u : alpha_y) ay_stamp[static_cast<size_t>(u)] = i;

    elig.reset();
    {
      auto py = P.class_of(y);
      for (VertexId v : conn) {
        if (v == y) continue;
        elig_stamp[static_cast<size_t>(v)] = i;
        elig_active[static_cast<size_t>(v)] = 1;
        elig.push_back(P.class_of(v) == py ? elig.inp_s : elig.out_s, v);
      }
    }

    bool attached = false;
    int first_sub = -1;

    while (!elig.empty(elig.out_s)) {
      VertexId z = elig.front(elig.out_s);
      elig.unlink(z);
      elig_active[static_cast<size_t>(z)] = 0;
      if (opts.trace) opts.trace->pivots.back().push_back(z);

      auto py = P.class_of(y);
      std::span<const VertexId> alpha_z =
          entries[static_cast<size_t>(alpha_slot[static_cast<size_t>(z)])].neighbors;

      auto flip_out = [&](VertexId u) {
        if (elig_stamp[static_cast<size_t>(u)] == i && elig_active[static_cast<size_t>(u)]) {
          elig.unlink(u);
          elig.push_back(elig.out_s, u);
        }
      };

      if (ay_stamp[static_cast<size_t>(z)] == i) {
        // z is an active neighbor of y: move z's co-component of the first
        // subslice out of P_y toward z, then push the rest of z's active
        // neighborhood away; y's own active neighborhood rides as a block.
        if (first_sub < 0) {
          first_sub = t.children[static_cast<size_t>(i)].front();
          const auto& co = a.cocomponents[static_cast<size_t>(first_sub)];
          part_vertices.clear();
          if (co.whole) {
            CoPart whole;
            whole.lazy_slice = first_sub;
            whole.lazy_length = t.size[static_cast<size_t>(first_sub)];
            part_vertices.emplace_back();
            a.append_part_vertices(whole, part_vertices.back());
          } else {
            for (const auto& part : co.parts) {
              part_vertices.emplace_back();
              a.append_part_vertices(part, part_vertices.back());
            }
          }
          for (size_t pid = 0; pid < part_vertices.size(); ++pid) {
            for (VertexId v : part_vertices[pid]) {
              part_of[static_cast<size_t>(v)] = static_cast<int>(pid);
              part_stamp[static_cast<size_t>(v)] = i;
            }
          }
          part_pulled.assign(part_vertices.size(), 0);
        }
        if (!attached) {
          attached = true;
          attach_buf.clear();
          for (VertexId u : alpha_y)
            if (P.class_of(u) == py) attach_buf.push_back(u);
          if (!attach_buf.empty()) {
            P.attach_block(y, attach_buf);
            for (VertexId u : attach_buf) {
              elig.unlink(u);
              elig.push_back(elig.inr_s, u);
            }
          }
        }

        int pid = part_of[static_cast<size_t>(z)];
        if (!part_pulled[static_cast<size_t>(pid)]) {
          part_pulled[static_cast<size_t>(pid)] = 1;
          moved.clear();
          P.pivot_pull(z, py, part_vertices[static_cast<size_t>(pid)], &moved);
          for (VertexId u : moved) flip_out(u);
        }

        sset.clear();
        for (VertexId u : alpha_z) {
          if (part_stamp[static_cast<size_t>(u)] == i &&
              part_of[static_cast<size_t>(u)] == pid)
            continue;  // z's own co-component is handled by the pull
          sset.push_back(u);
        }
        py = P.class_of(y);
        moved.clear();
        P.pivot_push(z, py, sset, &moved);
        auto py_new = P.class_of(y);
        if (py_new != py) {
          // y rode away with its block; everything it left behind is now
          // outside P_y without having been touched.
          keep.clear();
          for (VertexId u : moved) {
            if (u == y) continue;
            if (elig_stamp[static_cast<size_t>(u)] == i &&
                elig_active[static_cast<size_t>(u)]) {
              elig.unlink(u);
              keep.push_back(u);
            }
          }
          elig.splice_all(elig.inp_s, elig.out_s);
          for (VertexId u : keep) elig.push_back(elig.inp_s, u);
        } else {
          for (VertexId u : moved) flip_out(u);
        }
      } else {
        moved.clear();
        P.pivot_push(z, py, alpha_z, &moved);
        for (VertexId u : moved) flip_out(u);
      }
    }

    if (attached) P.detach_block(y);
    P.split_out_singleton(y);

    for (VertexId z : conn) {
      P.generalized_pivot(
          z, entries[static_cast<size_t>(alpha_slot[static_cast<size_t>(z)])].neighbors);
      if (opts.trace) opts.trace->pivots.back().push_back(z);
    }

    if (checker) checker->check_after_slice(a, P, i);
    if (opts.trace) opts.trace->snapshots.push_back(P.classes());
  }

  if (!P.all_singletons())
    throw NotPrimeError(
        "refinement did not reach singleton classes; "
        "the input is not a prime comparability graph");
  res.order = P.to_ordering();
  res.orientation = induced_orientation(g, res.order);
  res.counters.refinement = P.counters().total();
  return res;
}

LinearExtensionResult transitive_orientation(const Graph& g, const ExtensionOptions& opts) {
  if (g.vertex_count() == 0)
    throw std::invalid_argument("transitive_orientation: empty graph");
  if (!is_connected(g))
    throw std::invalid_argument("transitive_orientation: graph is disconnected");
  std::uint64_t source_ops = 0;
  VertexId s = source_vertex(g, &source_ops);
  LbfsResult r = lbfs_from(g, s);
  SliceTree t = build_slice_tree(r);
  SliceAnnotations a = compute_active_edges(g, t);
  order_connected_vertices(a, r);
  compute_cocomponents(g, t, a);
  LinearExtensionResult res = linear_extension(g, t, a, opts);
  res.counters.source = source_ops;
  res.counters.lbfs = r.ops;
  res.counters.slice_tree = t.ops;
  res.counters.slices = a.ops;
  return res;
}

}  // namespace lextor
