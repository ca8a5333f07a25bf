#include "lextor/lbfs.hpp"

#include <algorithm>
#include <stdexcept>

namespace lextor {

namespace {

// Ordered partition of the unvisited vertices, specialised for LBFS:
// classes are kept in label order (largest first) and every class keeps its
// members sorted by vertex index, so the head of the first class is always
// the lowest-index vertex of maximal label.
struct LbfsPartition {
  struct Class {
    int head = -1, tail = -1;
    int prev = -1, next = -1;
    int size = 0;
    int scratch = -1;  // sibling class id while splitting
  };

  std::vector<Class> classes;
  std::vector<int> free_ids;
  std::vector<int> nxt, prv, cls;  // per-vertex member links
  int first_class = -1;

  explicit LbfsPartition(int n) : nxt(n, -1), prv(n, -1), cls(n, -1) {
    classes.reserve(static_cast<size_t>(n) + 2);
  }

  int new_class() {
    if (!free_ids.empty()) {
      int id = free_ids.back();
      free_ids.pop_back();
      classes[static_cast<size_t>(id)] = {};
      return id;
    }
    classes.push_back({});
    return static_cast<int>(classes.size()) - 1;
  }

  void push_back_member(int c, int v) {
    Class& k = classes[static_cast<size_t>(c)];
    prv[static_cast<size_t>(v)] = k.tail;
    nxt[static_cast<size_t>(v)] = -1;
    if (k.tail >= 0)
      nxt[static_cast<size_t>(k.tail)] = v;
    else
      k.head = v;
    k.tail = v;
    ++k.size;
    cls[static_cast<size_t>(v)] = c;
  }

  void unlink_member(int v) {
    Class& k = classes[static_cast<size_t>(cls[static_cast<size_t>(v)])];
    int p = prv[static_cast<size_t>(v)], n = nxt[static_cast<size_t>(v)];
    if (p >= 0) nxt[static_cast<size_t>(p)] = n; else k.head = n;
    if (n >= 0) prv[static_cast<size_t>(n)] = p; else k.tail = p;
    --k.size;
  }

  void insert_class_before(int c, int at) {
    Class& k = classes[static_cast<size_t>(c)];
    Class& a = classes[static_cast<size_t>(at)];
    k.prev = a.prev;
    k.next = at;
    if (a.prev >= 0)
      classes[static_cast<size_t>(a.prev)].next = c;
    else
      first_class = c;
    a.prev = c;
  }

  void remove_class(int c) {
    Class& k = classes[static_cast<size_t>(c)];
    if (k.prev >= 0) classes[static_cast<size_t>(k.prev)].next = k.next;
    else first_class = k.next;
    if (k.next >= 0) classes[static_cast<size_t>(k.next)].prev = k.prev;
    free_ids.push_back(c);
  }
};

// Neighbor lists in ascending index order, built with one counting pass.
std::vector<std::vector<VertexId>> sorted_adjacency(const Graph& g) {
  std::vector<std::vector<VertexId>> sorted(static_cast<size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v)
    sorted[static_cast<size_t>(v)].reserve(static_cast<size_t>(g.degree(v)));
  for (int u = 0; u < g.vertex_count(); ++u)
    for (VertexId w : g.neighbors(u)) sorted[static_cast<size_t>(w)].push_back(u);
  return sorted;
}

void check_start(const Graph& g, VertexId start) {
  if (g.vertex_count() == 0) throw std::invalid_argument("lbfs: empty graph");
  if (start < 0 || start >= g.vertex_count())
    throw std::invalid_argument("lbfs: start vertex out of range");
}

}  // namespace

LbfsResult lbfs_from(const Graph& g, VertexId start) {
  check_start(g, start);
  int n = g.vertex_count();
  auto sorted = sorted_adjacency(g);

  LbfsResult r;
  r.sigma.reserve(static_cast<size_t>(n));
  r.position.assign(static_cast<size_t>(n), -1);
  r.labels.assign(static_cast<size_t>(n), {});

  LbfsPartition p(n);
  // The designated start is realised by class order: {start}, rest. The two
  // initial classes carry equal (empty) labels, so taking the head of the
  // first class selects the start first.
  int rest = -1;
  {
    int c0 = p.new_class();
    p.first_class = c0;
    p.push_back_member(c0, start);
    if (n > 1) {
      rest = p.new_class();
      p.classes[static_cast<size_t>(c0)].next = rest;
      p.classes[static_cast<size_t>(rest)].prev = c0;
      for (int v = 0; v < n; ++v)
        if (v != start) p.push_back_member(rest, v);
    }
  }

  std::vector<char> visited(static_cast<size_t>(n), 0);
  std::vector<int> touched;
  for (int t = 1; t <= n; ++t) {
    int fc = p.first_class;
    int v = p.classes[static_cast<size_t>(fc)].head;
    p.unlink_member(v);
    if (p.classes[static_cast<size_t>(fc)].size == 0) p.remove_class(fc);
    visited[static_cast<size_t>(v)] = 1;
    r.sigma.push_back(v);
    r.position[static_cast<size_t>(v)] = t - 1;
    ++r.ops;

    int value = n - t + 1;
    touched.clear();
    for (VertexId u : sorted[static_cast<size_t>(v)]) {
      ++r.ops;
      if (visited[static_cast<size_t>(u)]) continue;
      r.labels[static_cast<size_t>(u)].push_back(value);
      int c = p.cls[static_cast<size_t>(u)];
      int sib = p.classes[static_cast<size_t>(c)].scratch;
      if (sib < 0) {
        sib = p.new_class();
        p.insert_class_before(sib, c);  // labelled part ranks higher
        p.classes[static_cast<size_t>(c)].scratch = sib;
        touched.push_back(c);
        ++r.ops;
      }
      p.unlink_member(u);
      p.push_back_member(sib, u);
      ++r.ops;
    }
    for (int c : touched) {
      p.classes[static_cast<size_t>(c)].scratch = -1;
      if (p.classes[static_cast<size_t>(c)].size == 0) p.remove_class(c);
    }
  }
  return r;
}

LbfsResult lbfs(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("lbfs: empty graph");
  return lbfs_from(g, 0);
}

LbfsResult naive_lbfs_from(const Graph& g, VertexId start) {
  check_start(g, start);
  int n = g.vertex_count();
  LbfsResult r;
  r.position.assign(static_cast<size_t>(n), -1);
  r.labels.assign(static_cast<size_t>(n), {});
  std::vector<char> visited(static_cast<size_t>(n), 0);
  for (int t = 1; t <= n; ++t) {
    int best = -1;
    if (t == 1) {
      best = start;
    } else {
      for (int v = 0; v < n; ++v) {
        if (visited[static_cast<size_t>(v)]) continue;
        if (best < 0 ||
            std::lexicographical_compare(
                r.labels[static_cast<size_t>(best)].begin(),
                r.labels[static_cast<size_t>(best)].end(),
                r.labels[static_cast<size_t>(v)].begin(),
                r.labels[static_cast<size_t>(v)].end()))
          best = v;
      }
    }
    visited[static_cast<size_t>(best)] = 1;
    r.sigma.push_back(best);
    r.position[static_cast<size_t>(best)] = t - 1;
    int value = n - t + 1;
    for (VertexId u : g.neighbors(best)) {
      if (!visited[static_cast<size_t>(u)])
        r.labels[static_cast<size_t>(u)].push_back(value);
    }
  }
  return r;
}

LbfsResult naive_lbfs(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("lbfs: empty graph");
  return naive_lbfs_from(g, 0);
}

}  // namespace lextor
