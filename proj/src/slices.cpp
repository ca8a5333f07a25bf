#include "lextor/slices.hpp"

#include <algorithm>
#include <stdexcept>

namespace lextor {

SliceTree build_slice_tree(const LbfsResult& r) {
  int n = static_cast<int>(r.sigma.size());
  if (n == 0) throw std::invalid_argument("slice tree of an empty search");
  SliceTree t;
  t.sigma = r.sigma;
  t.position = r.position;
  t.parent.assign(static_cast<size_t>(n), -1);
  t.children.assign(static_cast<size_t>(n), {});
  t.size.assign(static_cast<size_t>(n), 1);
  t.label_length.assign(static_cast<size_t>(n), 0);
  t.label_last.assign(static_cast<size_t>(n), 0);

  // Path copy from the most recent vertex to the root, deepest node last.
  // Runs of equal labels keep only their deepest node, so labels along the
  // copy have strictly decreasing lengths and a length comparison suffices
  // to locate a prefix.
  std::vector<int> path = {0};
  for (int j = 1; j < n; ++j) {
    const auto& ylab = r.labels[static_cast<size_t>(r.sigma[static_cast<size_t>(j)])];
    const auto& zlab = r.labels[static_cast<size_t>(r.sigma[static_cast<size_t>(j - 1)])];
    size_t rho = 0;
    while (rho < ylab.size() && rho < zlab.size() && ylab[rho] == zlab[rho]) {
      ++rho;
      ++t.ops;
    }
    // The parent is the deepest ancestor whose label is a prefix of the
    // shared prefix. Label values pin the iteration that appended them, so
    // an ancestor label that prefixes the new vertex's label was already
    // carried by the new vertex when that slice formed; no ancestor with a
    // longer label can contain it. An ancestor with label exactly rho need
    // not exist (the tied moment may never have been the maximum).
    while (!path.empty() &&
           t.label_length[static_cast<size_t>(path.back())] > static_cast<int>(rho)) {
      path.pop_back();
      ++t.ops;
    }
    if (path.empty())
      throw std::invalid_argument("slice tree: labels do not form a prefix chain");
    int attach = path.back();
    t.parent[static_cast<size_t>(j)] = attach;
    t.children[static_cast<size_t>(attach)].push_back(j);
    t.label_length[static_cast<size_t>(j)] = static_cast<int>(ylab.size());
    t.label_last[static_cast<size_t>(j)] = ylab.empty() ? 0 : ylab.back();
    if (t.label_length[static_cast<size_t>(attach)] ==
        static_cast<int>(ylab.size()))
      path.pop_back();  // equal labels: keep only the deepest of the run
    path.push_back(j);
    ++t.ops;
  }
  for (int i = n - 1; i >= 1; --i)
    t.size[static_cast<size_t>(t.parent[static_cast<size_t>(i)])] +=
        t.size[static_cast<size_t>(i)];
  return t;
}

namespace {

// Bottom-up marking: finds the maximal slices fully contained in N(y).
// Marked interior nodes are those whose children (initial-vertex leaf plus
// subslices) are all marked; the count of marked nodes is O(deg(y)).
struct Marker {
  const SliceTree& t;
  std::vector<int> hit;        // marked children so far, per slice
  std::vector<char> full;      // slice fully covered
  std::vector<int> touched;
  std::vector<int> full_list;

  explicit Marker(const SliceTree& t_)
      : t(t_),
        hit(static_cast<size_t>(t_.slice_count()), 0),
        full(static_cast<size_t>(t_.slice_count()), 0) {}

  void bump(int slice, std::uint64_t& ops) {
    while (slice >= 0) {
      ++ops;
      if (hit[static_cast<size_t>(slice)]++ == 0) touched.push_back(slice);
      int want = 1 + static_cast<int>(t.children[static_cast<size_t>(slice)].size());
      if (hit[static_cast<size_t>(slice)] != want) break;
      full[static_cast<size_t>(slice)] = 1;
      full_list.push_back(slice);
      slice = t.parent[static_cast<size_t>(slice)];
    }
  }

  void reset() {
    for (int s : touched) {
      hit[static_cast<size_t>(s)] = 0;
      full[static_cast<size_t>(s)] = 0;
    }
    touched.clear();
    full_list.clear();
  }
};

}  // namespace

SliceAnnotations compute_active_edges(const Graph& g, const SliceTree& t) {
  int n = t.slice_count();
  SliceAnnotations a;
  a.labels.assign(static_cast<size_t>(n), {});
  a.active_edges.assign(static_cast<size_t>(n), {});
  a.alpha.assign(static_cast<size_t>(n), {});
  a.members.assign(static_cast<size_t>(n), {});
  a.connected.assign(static_cast<size_t>(n), {});
  a.cocomponents.assign(static_cast<size_t>(n), {});

  // Phase 1: label each slice with the earlier vertices universal to it.
  Marker marker(t);
  for (int i = 0; i < n; ++i) {
    VertexId y = t.sigma[static_cast<size_t>(i)];
    for (VertexId w : g.neighbors(y)) {
      // leaf w is a child of the slice it starts
      marker.bump(t.position[static_cast<size_t>(w)], a.ops);
    }
    for (int s : marker.full_list) {
      if (s <= i) continue;  // only slices discovered after y's own
      int p = t.parent[static_cast<size_t>(s)];
      if (p >= 0 && marker.full[static_cast<size_t>(p)]) continue;  // not maximal
      a.labels[static_cast<size_t>(s)].push_back(y);
    }
    marker.reset();
  }

  // Phase 2, bottom-up: assemble membership lists and emit this slice's
  // label pairs as active edges of the parent.
  // Membership order: [last child, moved in place when unlabeled]
  // [other children, copied, in order] [initial vertex] [first child, copied];
  // keeping the first child last makes {initial} U (children after the first)
  // a reusable prefix for the co-component pass.
  for (int s = n - 1; s >= 0; --s) {
    auto& mem = a.members[static_cast<size_t>(s)];
    const auto& kids = t.children[static_cast<size_t>(s)];
    VertexId x = t.sigma[static_cast<size_t>(s)];
    if (kids.empty()) {
      mem.push_back(x);
    } else if (kids.size() == 1) {
      int k0 = kids[0];
      if (a.labels[static_cast<size_t>(k0)].empty()) {
        mem = std::move(a.members[static_cast<size_t>(k0)]);
        mem.push_back(x);
      } else {
        mem.push_back(x);
        const auto& src = a.members[static_cast<size_t>(k0)];
        mem.insert(mem.end(), src.begin(), src.end());
        a.ops += src.size();
      }
    } else {
      int klast = kids.back();
      if (a.labels[static_cast<size_t>(klast)].empty()) {
        mem = std::move(a.members[static_cast<size_t>(klast)]);
      } else {
        const auto& src = a.members[static_cast<size_t>(klast)];
        mem.insert(mem.end(), src.begin(), src.end());
        a.ops += src.size();
      }
      for (size_t ki = 1; ki + 1 < kids.size(); ++ki) {
        const auto& src = a.members[static_cast<size_t>(kids[ki])];
        mem.insert(mem.end(), src.begin(), src.end());
        a.ops += src.size();
      }
      mem.push_back(x);
      {
        const auto& src = a.members[static_cast<size_t>(kids.front())];
        mem.insert(mem.end(), src.begin(), src.end());
        a.ops += src.size();
      }
    }

    const auto& lab = a.labels[static_cast<size_t>(s)];
    if (!lab.empty()) {
      int parent = t.parent[static_cast<size_t>(s)];
      for (VertexId z : lab) {
        for (VertexId v : mem) {
          a.active_edges[static_cast<size_t>(parent)].emplace_back(v, z);
          ++a.ops;
        }
      }
    }
  }

  // Phase 3: per-slice active adjacency, grouped slice by slice so the
  // entry-dedup stamps cannot be clobbered by other slices.
  std::vector<int> alpha_slot(static_cast<size_t>(g.vertex_count()), -1);
  std::vector<int> alpha_stamp(static_cast<size_t>(g.vertex_count()), -1);
  for (int s = 0; s < n; ++s) {
    auto& entries = a.alpha[static_cast<size_t>(s)];
    auto push = [&](VertexId v, VertexId w) {
      if (alpha_stamp[static_cast<size_t>(v)] != s) {
        alpha_stamp[static_cast<size_t>(v)] = s;
        alpha_slot[static_cast<size_t>(v)] = static_cast<int>(entries.size());
        entries.push_back({v, {}});
      }
      entries[static_cast<size_t>(alpha_slot[static_cast<size_t>(v)])]
          .neighbors.push_back(w);
      ++a.ops;
    };
    for (auto [u, w] : a.active_edges[static_cast<size_t>(s)]) {
      push(u, w);
      push(w, u);
    }
  }
  return a;
}

void order_connected_vertices(SliceAnnotations& a, const LbfsResult& r) {
  int n = static_cast<int>(r.sigma.size());
  std::vector<std::vector<int>> slices_of(static_cast<size_t>(n));
  for (int s = 0; s < static_cast<int>(a.alpha.size()); ++s) {
    a.connected[static_cast<size_t>(s)].clear();
    a.connected[static_cast<size_t>(s)].reserve(a.alpha[static_cast<size_t>(s)].size());
    for (const auto& entry : a.alpha[static_cast<size_t>(s)]) {
      slices_of[static_cast<size_t>(entry.v)].push_back(s);
      ++a.ops;
    }
  }
  for (VertexId v : r.sigma) {
    for (int s : slices_of[static_cast<size_t>(v)]) {
      a.connected[static_cast<size_t>(s)].push_back(v);
      ++a.ops;
    }
  }
}

void compute_cocomponents(const Graph& g, const SliceTree& t, SliceAnnotations& a) {
  (void)g;
  int n = t.slice_count();
  std::vector<int> deg(static_cast<size_t>(g.vertex_count()), 0);
  std::vector<int> deg_stamp(static_cast<size_t>(g.vertex_count()), -1);

  for (int s = n - 1; s >= 0; --s) {
    auto& out = a.cocomponents[static_cast<size_t>(s)];
    const auto& kids = t.children[static_cast<size_t>(s)];
    if (kids.empty()) {
      out.whole = true;
      continue;
    }
    for (const auto& entry : a.alpha[static_cast<size_t>(s)]) {
      deg[static_cast<size_t>(entry.v)] = static_cast<int>(entry.neighbors.size());
      deg_stamp[static_cast<size_t>(entry.v)] = s;
      ++a.ops;
    }
    VertexId x = t.sigma[static_cast<size_t>(s)];
    if (deg_stamp[static_cast<size_t>(x)] != s) {
      out.whole = true;  // initial vertex disconnected at this level
      continue;
    }
    int first = kids.front();
    int needed = t.size[static_cast<size_t>(s)] - t.size[static_cast<size_t>(first)];
    auto universal = [&](VertexId v) {
      ++a.ops;
      return deg_stamp[static_cast<size_t>(v)] == s &&
             deg[static_cast<size_t>(v)] == needed;
    };

    // Seed component: initial vertex plus every subslice after the first;
    // by construction this is a prefix of this slice's membership list.
    CoPart core;
    core.lazy_slice = s;
    core.lazy_length = needed;
    out.parts.clear();

    const auto& sub = a.cocomponents[static_cast<size_t>(first)];
    auto test_part = [&](const CoPart& part) {
      if (part.lazy_slice >= 0) {
        const auto& src = a.members[static_cast<size_t>(part.lazy_slice)];
        for (int i = 0; i < part.lazy_length; ++i)
          if (!universal(src[static_cast<size_t>(i)])) return false;
      }
      for (VertexId v : part.extras)
        if (!universal(v)) return false;
      return true;
    };
    auto absorb = [&](const CoPart& part) {
      a.append_part_vertices(part, core.extras);
      a.ops += part.extras.size() + static_cast<size_t>(part.lazy_length);
    };

    if (sub.whole) {
      CoPart whole;
      whole.lazy_slice = first;
      whole.lazy_length = t.size[static_cast<size_t>(first)];
      if (test_part(whole))
        out.parts.push_back(std::move(whole));
      else
        absorb(whole);
    } else {
      for (const auto& part : sub.parts) {
        if (test_part(part))
          out.parts.push_back(part);
        else
          absorb(part);
      }
    }
    out.parts.push_back(std::move(core));
    if (out.parts.size() == 1) {
      out.parts.clear();
      out.whole = true;
    } else {
      out.whole = false;
    }
  }
}

void SliceAnnotations::append_part_vertices(const CoPart& part,
                                            std::vector<VertexId>& out) const {
  if (part.lazy_slice >= 0) {
    const auto& src = members[static_cast<size_t>(part.lazy_slice)];
    out.insert(out.end(), src.begin(), src.begin() + part.lazy_length);
  }
  out.insert(out.end(), part.extras.begin(), part.extras.end());
}

std::vector<std::vector<VertexId>> cocomponent_sets(const SliceTree& t,
                                                    const SliceAnnotations& a,
                                                    int slice) {
  // Lazy prefixes of absorbed membership lists are rebuilt from the sigma
  // intervals here; the list held either a whole slice or a slice minus its
  // first subslice. Diagnostic path only.
  auto expand = [&](const CoPart& part, std::vector<VertexId>& out) {
    if (part.lazy_slice < 0 ||
        static_cast<int>(a.members[static_cast<size_t>(part.lazy_slice)].size()) >=
            part.lazy_length) {
      a.append_part_vertices(part, out);
      return;
    }
    int s = part.lazy_slice;
    auto mem = t.members(s);
    if (part.lazy_length == t.size[static_cast<size_t>(s)]) {
      out.insert(out.end(), mem.begin(), mem.end());
    } else {
      int first = t.children[static_cast<size_t>(s)].front();
      int fbegin = first, fend = first + t.size[static_cast<size_t>(first)];
      for (int pos = s; pos < s + t.size[static_cast<size_t>(s)]; ++pos) {
        if (pos < fbegin || pos >= fend)
          out.push_back(t.sigma[static_cast<size_t>(pos)]);
      }
    }
    out.insert(out.end(), part.extras.begin(), part.extras.end());
  };
  std::vector<std::vector<VertexId>> parts;
  const auto& co = a.cocomponents[static_cast<size_t>(slice)];
  if (co.whole) {
    auto mem = t.members(slice);
    parts.emplace_back(mem.begin(), mem.end());
  } else {
    for (const auto& part : co.parts) {
      std::vector<VertexId> vs;
      expand(part, vs);
      parts.push_back(std::move(vs));
    }
  }
  for (auto& p : parts)
    std::sort(p.begin(), p.end(), [&](VertexId l, VertexId r) {
      return t.position[static_cast<size_t>(l)] < t.position[static_cast<size_t>(r)];
    });
  std::sort(parts.begin(), parts.end(), [&](const auto& l, const auto& r) {
    return t.position[static_cast<size_t>(l.front())] <
           t.position[static_cast<size_t>(r.front())];
  });
  return parts;
}

}  // namespace lextor
