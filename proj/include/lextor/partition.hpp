#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lextor/graph.hpp"

namespace lextor {

/// Ordered partition of a vertex set into non-empty classes, with the four
/// pivot-style refinements used throughout the library.
///
/// Representation: classes form a doubly-linked list; members of a class form
/// a doubly-linked list; each class knows its range (number of elements in
/// earlier classes plus its own count); each element points back at its class.
/// Splits move elements into a freshly created adjacent class, so a class
/// object survives as the remainder of its own splits and is destroyed only
/// when every element has been moved out by whole-block operations.
///
/// A contiguous run of elements may be attached under an anchor element as a
/// block: the run then rides along whenever the anchor moves (one splice, not
/// per-element work), until members are extracted individually or the block
/// is detached. Blocks are only supported by pivot_push / pivot_pull /
/// split_out_singleton; pivot and generalized_pivot reject partitions with
/// attached blocks.
///
/// Single-writer: no concurrent mutation, no reads during mutation.
class OrderedPartition {
 public:
  class Class;
  /// Stable handle to a partition class; valid until the class is emptied.
  using ClassRef = Class*;

  struct Counters {
    std::uint64_t element_moves = 0;
    std::uint64_t block_splices = 0;
    std::uint64_t classes_created = 0;
    std::uint64_t scan_steps = 0;
    std::uint64_t total() const {
      return element_moves + block_splices + classes_created + scan_steps;
    }
  };

  OrderedPartition() = default;
  /// Classes in the given order. Throws std::invalid_argument on empty or
  /// overlapping classes.
  explicit OrderedPartition(const std::vector<std::vector<VertexId>>& classes);
  ~OrderedPartition();

  OrderedPartition(OrderedPartition&&) noexcept;
  OrderedPartition& operator=(OrderedPartition&&) noexcept;
  OrderedPartition(const OrderedPartition&) = delete;
  OrderedPartition& operator=(const OrderedPartition&) = delete;

  /// Splits every class other than the pivot's by N(pivot): the neighbor part
  /// lands on the far side of the pivot's class. Classes fully inside or
  /// fully outside N(pivot) are untouched. O(deg(pivot)).
  void pivot(const Graph& g, VertexId p, std::vector<VertexId>* moved = nullptr);

  /// Like pivot but splitting by an explicit set s (s need not be scanned for
  /// duplicates; elements equal to p or outside the partition are rejected).
  void generalized_pivot(VertexId p, std::span<const VertexId> s,
                         std::vector<VertexId>* moved = nullptr);

  /// Splits only `target`: the s-part lands on the side of `target` far from
  /// the pivot's class. No-op unless s properly splits target.
  void pivot_push(VertexId p, ClassRef target, std::span<const VertexId> s,
                  std::vector<VertexId>* moved = nullptr);

  /// Mirror of pivot_push: the s-part lands on the side near the pivot.
  void pivot_pull(VertexId p, ClassRef target, std::span<const VertexId> s,
                  std::vector<VertexId>* moved = nullptr);

  /// Replaces class(v) with {v}, rest (in that order). No-op on singletons.
  void split_out_singleton(VertexId v);

  /// Attaches `members` (which must share v's class) as a block under v.
  void attach_block(VertexId anchor, std::span<const VertexId> members);
  /// Releases every member still attached under `anchor`.
  void detach_block(VertexId anchor);
  /// Vertices currently attached under `anchor`, in block order.
  std::vector<VertexId> block_members(VertexId anchor) const;

  /// Vertex sequence when all classes are singletons; throws otherwise.
  std::vector<VertexId> to_ordering() const;
  bool all_singletons() const;

  bool contains(VertexId v) const;
  ClassRef class_of(VertexId v) const;
  ClassRef first_class() const { return first_class_; }
  ClassRef last_class() const { return last_class_; }
  int class_size(ClassRef c) const;
  /// (elements in earlier classes, own element count)
  std::pair<int, int> class_range(ClassRef c) const;
  int class_count() const { return class_count_; }
  int element_count() const { return element_count_; }

  std::vector<VertexId> class_members(ClassRef c) const;
  std::vector<std::vector<VertexId>> classes() const;

  /// Debug form: classes as bracketed member lists in order, block members
  /// tagged with their anchor, e.g. `[x][z][q w][r v][y u@y][a][b]`.
  std::string dump() const;

  const Counters& counters() const { return counters_; }
  void reset_counters() { counters_ = {}; }

  /// Full-scan structural validation; throws std::logic_error on corruption.
  void check_consistent() const;

 private:
  struct Node;

  Class* make_class_before(Class* at);
  Class* make_class_after(Class* at);
  void unlink_node(int v);
  void append_node(int v, Class* to);
  void move_element(int v, Class* from, Class* to);
  void splice_block_to(int anchor, Class* from, Class* to);
  void detach_single(int v);
  void fix_adjacent_ranges(Class* a, Class* b, int before_both);
  void split_one_class(VertexId p, Class* target, std::span<const VertexId> s,
                       bool s_part_near_pivot, std::vector<VertexId>* moved);

  std::vector<Node> nodes_;
  std::vector<int> block_size_;
  std::vector<int> block_tail_;
  Class* first_class_ = nullptr;
  Class* last_class_ = nullptr;
  int class_count_ = 0;
  int element_count_ = 0;
  int anchors_active_ = 0;
  std::vector<char> seen_;  // scratch for split passes
  Counters counters_;
};

}  // namespace lextor
