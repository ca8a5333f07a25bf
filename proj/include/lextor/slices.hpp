#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lextor/graph.hpp"
#include "lextor/lbfs.hpp"

namespace lextor {

/// Laminar tree of LBFS slices. Slice i (0-based) is the set of vertices
/// sharing the maximal label immediately before visit i; its initial vertex
/// is sigma[i] and its members are the consecutive run sigma[i .. i+size).
/// Interior nodes are slices; each slice's first child is its initial vertex
/// (kept implicit), followed by its maximal subslices in discovery order.
struct SliceTree {
  std::vector<VertexId> sigma;
  std::vector<int> position;
  std::vector<int> parent;                 // parent slice index; -1 for root
  std::vector<std::vector<int>> children;  // subslice indices, in order
  std::vector<int> size;                   // member count of each slice
  std::vector<int> label_length;           // slice label = final label of its
  std::vector<int> label_last;             // initial vertex; summarised here
  std::uint64_t ops = 0;

  int slice_count() const { return static_cast<int>(parent.size()); }
  std::span<const VertexId> members(int slice) const {
    return std::span<const VertexId>(sigma).subspan(
        static_cast<size_t>(slice), static_cast<size_t>(size[static_cast<size_t>(slice)]));
  }
};

/// Builds the slice tree from retained LBFS labels by attaching each vertex
/// under the nearest ancestor of its predecessor whose label equals their
/// longest shared prefix. A running copy of the root path that keeps only the
/// deepest slice of each equal-label run makes every label comparison O(1).
SliceTree build_slice_tree(const LbfsResult& r);

/// One part of a slice's co-component partition. The vertex list is the
/// concatenation of a prefix of the owning structure's membership list (so
/// vertices without incident active edges are never copied) and an explicit
/// remainder.
struct CoPart {
  int lazy_slice = -1;
  int lazy_length = 0;
  std::vector<VertexId> extras;
};

struct SliceCoComponents {
  bool whole = true;            // single co-component: the slice itself
  std::vector<CoPart> parts;    // otherwise >= 2 parts
};

/// Per-slice structures derived from one LBFS: active edges (edges whose
/// endpoints lie in different maximal subslices), the active adjacency
/// restricted to each slice, membership lists, connected vertices, and
/// co-components of the induced subgraphs.
struct SliceAnnotations {
  struct AlphaEntry {
    VertexId v;
    std::vector<VertexId> neighbors;
  };

  std::vector<std::vector<VertexId>> labels;        // exterior vertices universal
                                                    // to each slice from earlier
  std::vector<std::vector<Edge>> active_edges;      // per slice
  std::vector<std::vector<AlphaEntry>> alpha;       // per-slice active adjacency
  std::vector<std::vector<VertexId>> members;       // copy-scheme lists; a list
                                                    // absorbed by its parent is
                                                    // left empty
  std::vector<std::vector<VertexId>> connected;     // per slice, LBFS order
  std::vector<SliceCoComponents> cocomponents;
  std::uint64_t ops = 0;

  /// Appends a part's vertices (lazy prefix, then extras).
  void append_part_vertices(const CoPart& part, std::vector<VertexId>& out) const;
};

/// Fills labels, active_edges, alpha and members. Membership lists are built
/// bottom-up: the last subslice's list is reused in place when it has no
/// exterior label (its vertices have no incident active edge at this level),
/// other children are copied, so total work is O(n + m).
SliceAnnotations compute_active_edges(const Graph& g, const SliceTree& t);

/// Fills `connected`: each slice's vertices with incident active edges,
/// ordered by LBFS position. O(n + m).
void order_connected_vertices(SliceAnnotations& a, const LbfsResult& r);

/// Fills `cocomponents` bottom-up. A slice whose initial vertex has no
/// incident active edge is one co-component; otherwise the first subslice's
/// parts are tested for universality against the rest of the slice (an O(1)
/// active-degree comparison per vertex) and non-universal parts merge into
/// the component containing the initial vertex.
void compute_cocomponents(const Graph& g, const SliceTree& t, SliceAnnotations& a);

/// Materialised co-component partition of one slice, each part ordered by
/// LBFS position, parts ordered by their first vertex. For tests and traces.
std::vector<std::vector<VertexId>> cocomponent_sets(const SliceTree& t,
                                                    const SliceAnnotations& a,
                                                    int slice);

}  // namespace lextor
