#include "lextor/partition.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace lextor {

struct OrderedPartition::Node {
  int prev = -1;
  int next = -1;
  Class* cls = nullptr;  // direct pointer; stale while riding under an anchor
  VertexId anchor = -1;  // anchor vertex when attached to a block
};

class OrderedPartition::Class {
 public:
  Class* prev = nullptr;
  Class* next = nullptr;
  int head = -1;
  int tail = -1;
  int size = 0;
  int before = 0;  // elements in earlier classes
  // split scratch
  int split_count = 0;
  Class* sibling = nullptr;
};

namespace {
constexpr const char* kAbsent = "vertex is not in the partition";
}

OrderedPartition::OrderedPartition(const std::vector<std::vector<VertexId>>& classes) {
  int max_id = -1;
  for (const auto& c : classes) {
    if (c.empty()) throw std::invalid_argument("empty partition class");
    for (VertexId v : c) {
      if (v < 0) throw std::invalid_argument("negative vertex id");
      max_id = std::max(max_id, v);
    }
  }
  std::vector<char> used(static_cast<size_t>(max_id) + 1, 0);
  for (const auto& c : classes) {
    for (VertexId v : c) {
      if (used[static_cast<size_t>(v)])
        throw std::invalid_argument("overlapping partition classes");
      used[static_cast<size_t>(v)] = 1;
    }
  }
  nodes_.resize(static_cast<size_t>(max_id) + 1);
  block_size_.assign(static_cast<size_t>(max_id) + 1, 0);
  block_tail_.assign(static_cast<size_t>(max_id) + 1, -1);
  int before = 0;
  for (const auto& c : classes) {
    Class* k = new Class();
    k->before = before;
    k->prev = last_class_;
    if (last_class_)
      last_class_->next = k;
    else
      first_class_ = k;
    last_class_ = k;
    ++class_count_;
    for (VertexId v : c) {
      append_node(v, k);
      ++element_count_;
    }
    before += k->size;
  }
  seen_.assign(nodes_.size(), 0);
}

OrderedPartition::~OrderedPartition() {
  Class* c = first_class_;
  while (c) {
    Class* next = c->next;
    delete c;
    c = next;
  }
}

OrderedPartition::OrderedPartition(OrderedPartition&& o) noexcept { *this = std::move(o); }

OrderedPartition& OrderedPartition::operator=(OrderedPartition&& o) noexcept {
  if (this != &o) {
    this->~OrderedPartition();
    nodes_ = std::move(o.nodes_);
    block_size_ = std::move(o.block_size_);
    block_tail_ = std::move(o.block_tail_);
    first_class_ = o.first_class_;
    last_class_ = o.last_class_;
    class_count_ = o.class_count_;
    element_count_ = o.element_count_;
    anchors_active_ = o.anchors_active_;
    seen_ = std::move(o.seen_);
    counters_ = o.counters_;
    o.first_class_ = o.last_class_ = nullptr;
    o.class_count_ = o.element_count_ = o.anchors_active_ = 0;
  }
  return *this;
}

bool OrderedPartition::contains(VertexId v) const {
  return v >= 0 && static_cast<size_t>(v) < nodes_.size() &&
         nodes_[static_cast<size_t>(v)].cls != nullptr;
}

OrderedPartition::ClassRef OrderedPartition::class_of(VertexId v) const {
  if (!contains(v)) throw std::invalid_argument(kAbsent);
  const Node& n = nodes_[static_cast<size_t>(v)];
  if (n.anchor >= 0) return nodes_[static_cast<size_t>(n.anchor)].cls;
  return n.cls;
}

int OrderedPartition::class_size(ClassRef c) const { return c->size; }

std::pair<int, int> OrderedPartition::class_range(ClassRef c) const {
  return {c->before, c->size};
}

void OrderedPartition::append_node(int v, Class* to) {
  Node& n = nodes_[static_cast<size_t>(v)];
  n.prev = to->tail;
  n.next = -1;
  if (to->tail >= 0)
    nodes_[static_cast<size_t>(to->tail)].next = v;
  else
    to->head = v;
  to->tail = v;
  n.cls = to;
  ++to->size;
}

void OrderedPartition::unlink_node(int v) {
  Node& n = nodes_[static_cast<size_t>(v)];
  Class* c = n.cls;
  if (n.prev >= 0)
    nodes_[static_cast<size_t>(n.prev)].next = n.next;
  else
    c->head = n.next;
  if (n.next >= 0)
    nodes_[static_cast<size_t>(n.next)].prev = n.prev;
  else
    c->tail = n.prev;
  --c->size;
}

void OrderedPartition::move_element(int v, Class* from, Class* to) {
  (void)from;
  unlink_node(v);
  append_node(v, to);
  ++counters_.element_moves;
}

void OrderedPartition::splice_block_to(int anchor, Class* from, Class* to) {
  // Moves anchor plus its attached run with O(1) pointer surgery. Riders'
  // direct class pointers go stale; class_of resolves them via the anchor.
  Node& a = nodes_[static_cast<size_t>(anchor)];
  int tail = block_tail_[static_cast<size_t>(anchor)];
  int count = 1 + block_size_[static_cast<size_t>(anchor)];
  // unlink range [anchor .. tail] from `from`
  if (a.prev >= 0)
    nodes_[static_cast<size_t>(a.prev)].next = nodes_[static_cast<size_t>(tail)].next;
  else
    from->head = nodes_[static_cast<size_t>(tail)].next;
  if (nodes_[static_cast<size_t>(tail)].next >= 0)
    nodes_[static_cast<size_t>(nodes_[static_cast<size_t>(tail)].next)].prev = a.prev;
  else
    from->tail = a.prev;
  from->size -= count;
  // append range to `to`
  a.prev = to->tail;
  if (to->tail >= 0)
    nodes_[static_cast<size_t>(to->tail)].next = anchor;
  else
    to->head = anchor;
  nodes_[static_cast<size_t>(tail)].next = -1;
  to->tail = tail;
  to->size += count;
  a.cls = to;
  ++counters_.block_splices;
}

void OrderedPartition::detach_single(int v) {
  Node& n = nodes_[static_cast<size_t>(v)];
  int a = n.anchor;
  n.cls = nodes_[static_cast<size_t>(a)].cls;
  n.anchor = -1;
  if (block_tail_[static_cast<size_t>(a)] == v)
    block_tail_[static_cast<size_t>(a)] = n.prev == a ? -1 : n.prev;
  if (--block_size_[static_cast<size_t>(a)] == 0) {
    block_tail_[static_cast<size_t>(a)] = -1;
    --anchors_active_;
  }
}

OrderedPartition::Class* OrderedPartition::make_class_before(Class* at) {
  Class* k = new Class();
  k->prev = at->prev;
  k->next = at;
  if (at->prev)
    at->prev->next = k;
  else
    first_class_ = k;
  at->prev = k;
  ++class_count_;
  ++counters_.classes_created;
  return k;
}

OrderedPartition::Class* OrderedPartition::make_class_after(Class* at) {
  Class* k = new Class();
  k->next = at->next;
  k->prev = at;
  if (at->next)
    at->next->prev = k;
  else
    last_class_ = k;
  at->next = k;
  ++class_count_;
  ++counters_.classes_created;
  return k;
}

void OrderedPartition::fix_adjacent_ranges(Class* a, Class* b, int before_both) {
  // a immediately precedes b
  a->before = before_both;
  b->before = before_both + a->size;
}

void OrderedPartition::generalized_pivot(VertexId p, std::span<const VertexId> s,
                                         std::vector<VertexId>* moved) {
  if (anchors_active_ > 0)
    throw std::logic_error("generalized_pivot with attached blocks");
  Class* pc = class_of(p);
  std::vector<Class*> touched;
  for (VertexId u : s) {
    ++counters_.scan_steps;
    if (u == p) continue;
    Class* c = class_of(u);
    if (c == pc) continue;
    if (c->split_count == 0) touched.push_back(c);
    ++c->split_count;
  }
  for (Class* c : touched) {
    if (c->split_count < c->size) {
      // s properly splits c: the s-part always lands on the far side of the
      // pivot's class, so the pivot ends adjacent to the non-neighbors.
      c->sibling = c->before < pc->before ? make_class_before(c) : make_class_after(c);
    }
  }
  for (VertexId u : s) {
    if (u == p) continue;
    Class* c = class_of(u);
    if (c->sibling == nullptr) continue;
    move_element(u, c, c->sibling);
    if (moved) moved->push_back(u);
  }
  for (Class* c : touched) {
    if (c->sibling) {
      Class* sib = c->sibling;
      if (sib == c->prev)
        fix_adjacent_ranges(sib, c, c->before);
      else
        fix_adjacent_ranges(c, sib, c->before);
      c->sibling = nullptr;
    }
    c->split_count = 0;
  }
}

void OrderedPartition::pivot(const Graph& g, VertexId p, std::vector<VertexId>* moved) {
  generalized_pivot(p, g.neighbors(p), moved);
}

void OrderedPartition::split_one_class(VertexId p, Class* target,
                                       std::span<const VertexId> s,
                                       bool s_part_near_pivot,
                                       std::vector<VertexId>* moved) {
  if (target == nullptr) throw std::invalid_argument("null target class");
  Class* pc = class_of(p);
  if (pc == target)
    throw std::invalid_argument("pivot must not be in the target class");

  // Exact size of the set that would move: s-members of target plus riders
  // of any anchors among them, without double-counting riders also in s.
  int count = 0;
  std::vector<VertexId> riders_in_s;
  std::vector<VertexId> marked;
  for (VertexId u : s) {
    ++counters_.scan_steps;
    if (u == p || !contains(u)) continue;
    if (seen_[static_cast<size_t>(u)]) continue;
    if (class_of(u) != target) continue;
    seen_[static_cast<size_t>(u)] = 1;
    marked.push_back(u);
    ++count;
    if (block_size_[static_cast<size_t>(u)] > 0)
      count += block_size_[static_cast<size_t>(u)];
    if (nodes_[static_cast<size_t>(u)].anchor >= 0) riders_in_s.push_back(u);
  }
  for (VertexId r : riders_in_s) {
    VertexId a = nodes_[static_cast<size_t>(r)].anchor;
    if (seen_[static_cast<size_t>(a)]) --count;  // rode with its anchor
  }
  if (count == 0 || count == target->size) {
    for (VertexId u : marked) seen_[static_cast<size_t>(u)] = 0;
    return;
  }

  bool target_earlier = target->before < pc->before;
  // near side = side of target facing the pivot's class
  bool insert_after = target_earlier == s_part_near_pivot;
  int before_both = target->before;
  Class* sib = insert_after ? make_class_after(target) : make_class_before(target);

  for (VertexId u : s) {
    if (u == p || !contains(u)) continue;
    if (class_of(u) != target) continue;  // already moved (rode along) or foreign
    if (nodes_[static_cast<size_t>(u)].anchor >= 0) {
      detach_single(u);
      move_element(u, target, sib);
    } else if (block_size_[static_cast<size_t>(u)] > 0) {
      splice_block_to(u, target, sib);
    } else {
      move_element(u, target, sib);
    }
    if (moved) moved->push_back(u);
  }
  for (VertexId u : marked) seen_[static_cast<size_t>(u)] = 0;
  if (insert_after)
    fix_adjacent_ranges(target, sib, before_both);
  else
    fix_adjacent_ranges(sib, target, before_both);
}

void OrderedPartition::pivot_push(VertexId p, ClassRef target,
                                  std::span<const VertexId> s,
                                  std::vector<VertexId>* moved) {
  split_one_class(p, target, s, /*s_part_near_pivot=*/false, moved);
}

void OrderedPartition::pivot_pull(VertexId p, ClassRef target,
                                  std::span<const VertexId> s,
                                  std::vector<VertexId>* moved) {
  split_one_class(p, target, s, /*s_part_near_pivot=*/true, moved);
}

void OrderedPartition::split_out_singleton(VertexId v) {
  Class* c = class_of(v);
  if (c->size == 1) return;
  if (block_size_[static_cast<size_t>(v)] > 0)
    throw std::logic_error("split_out_singleton on an anchor with a block");
  if (nodes_[static_cast<size_t>(v)].anchor >= 0) detach_single(v);
  int before_both = c->before;
  Class* k = make_class_before(c);
  move_element(v, c, k);
  fix_adjacent_ranges(k, c, before_both);
}

void OrderedPartition::attach_block(VertexId anchor, std::span<const VertexId> members) {
  Class* ac = class_of(anchor);
  if (nodes_[static_cast<size_t>(anchor)].anchor >= 0)
    throw std::invalid_argument("anchor is itself attached to a block");
  for (VertexId u : members) {
    if (u == anchor) throw std::invalid_argument("anchor cannot join its own block");
    if (class_of(u) != ac)
      throw std::invalid_argument("block members must share the anchor's class");
    if (nodes_[static_cast<size_t>(u)].anchor >= 0)
      throw std::invalid_argument("member already attached to a block");
  }
  for (VertexId u : members) {
    unlink_node(u);
    // insert u directly after the current block tail to keep the run contiguous
    int at = block_tail_[static_cast<size_t>(anchor)] >= 0
                 ? block_tail_[static_cast<size_t>(anchor)]
                 : anchor;
    Node& n = nodes_[static_cast<size_t>(u)];
    Node& a = nodes_[static_cast<size_t>(at)];
    n.prev = at;
    n.next = a.next;
    if (a.next >= 0)
      nodes_[static_cast<size_t>(a.next)].prev = u;
    else
      ac->tail = u;
    a.next = u;
    ++ac->size;  // unlink_node decremented
    n.cls = ac;
    n.anchor = anchor;
    if (block_size_[static_cast<size_t>(anchor)] == 0) ++anchors_active_;
    ++block_size_[static_cast<size_t>(anchor)];
    block_tail_[static_cast<size_t>(anchor)] = u;
    ++counters_.element_moves;
  }
}

void OrderedPartition::detach_block(VertexId anchor) {
  if (block_size_[static_cast<size_t>(anchor)] == 0) return;
  Class* ac = nodes_[static_cast<size_t>(anchor)].cls;
  int u = nodes_[static_cast<size_t>(anchor)].next;
  while (u >= 0 && nodes_[static_cast<size_t>(u)].anchor == anchor) {
    nodes_[static_cast<size_t>(u)].anchor = -1;
    nodes_[static_cast<size_t>(u)].cls = ac;
    u = nodes_[static_cast<size_t>(u)].next;
    ++counters_.scan_steps;
  }
  block_size_[static_cast<size_t>(anchor)] = 0;
  block_tail_[static_cast<size_t>(anchor)] = -1;
  --anchors_active_;
}

std::vector<VertexId> OrderedPartition::block_members(VertexId anchor) const {
  std::vector<VertexId> out;
  int u = nodes_[static_cast<size_t>(anchor)].next;
  while (u >= 0 && nodes_[static_cast<size_t>(u)].anchor == anchor) {
    out.push_back(u);
    u = nodes_[static_cast<size_t>(u)].next;
  }
  return out;
}

bool OrderedPartition::all_singletons() const {
  for (Class* c = first_class_; c; c = c->next)
    if (c->size != 1) return false;
  return true;
}

std::vector<VertexId> OrderedPartition::to_ordering() const {
  std::vector<VertexId> out;
  out.reserve(static_cast<size_t>(element_count_));
  for (Class* c = first_class_; c; c = c->next) {
    if (c->size != 1)
      throw std::invalid_argument("to_ordering: non-singleton class present");
    out.push_back(c->head);
  }
  return out;
}

std::vector<VertexId> OrderedPartition::class_members(ClassRef c) const {
  std::vector<VertexId> out;
  out.reserve(static_cast<size_t>(c->size));
  for (int v = c->head; v >= 0; v = nodes_[static_cast<size_t>(v)].next)
    out.push_back(v);
  return out;
}

std::vector<std::vector<VertexId>> OrderedPartition::classes() const {
  std::vector<std::vector<VertexId>> out;
  out.reserve(static_cast<size_t>(class_count_));
  for (Class* c = first_class_; c; c = c->next) out.push_back(class_members(c));
  return out;
}

std::string OrderedPartition::dump() const {
  std::ostringstream os;
  for (Class* c = first_class_; c; c = c->next) {
    os << '[';
    bool first = true;
    for (int v = c->head; v >= 0; v = nodes_[static_cast<size_t>(v)].next) {
      if (!first) os << ' ';
      first = false;
      os << v;
      if (nodes_[static_cast<size_t>(v)].anchor >= 0)
        os << '@' << nodes_[static_cast<size_t>(v)].anchor;
    }
    os << ']';
  }
  return os.str();
}

void OrderedPartition::check_consistent() const {
  int before = 0;
  int total = 0;
  std::vector<char> found(nodes_.size(), 0);
  for (Class* c = first_class_; c; c = c->next) {
    if (c->size <= 0) throw std::logic_error("empty class");
    if (c->before != before) throw std::logic_error("range offset mismatch");
    int count = 0;
    int prev = -1;
    for (int v = c->head; v >= 0; v = nodes_[static_cast<size_t>(v)].next) {
      const Node& n = nodes_[static_cast<size_t>(v)];
      if (n.prev != prev) throw std::logic_error("member link mismatch");
      if (found[static_cast<size_t>(v)]) throw std::logic_error("element repeated");
      found[static_cast<size_t>(v)] = 1;
      if (class_of(v) != c) throw std::logic_error("back-reference mismatch");
      if (n.anchor >= 0) {
        // riders must directly follow their anchor's run
        if (prev < 0 ||
            (nodes_[static_cast<size_t>(prev)].anchor != n.anchor && prev != n.anchor))
          throw std::logic_error("block member not contiguous with anchor");
      }
      prev = v;
      ++count;
    }
    if (c->tail != prev) throw std::logic_error("tail mismatch");
    if (count != c->size) throw std::logic_error("size mismatch");
    before += c->size;
    total += count;
  }
  if (total != element_count_) throw std::logic_error("element count mismatch");
  for (size_t v = 0; v < nodes_.size(); ++v) {
    if (nodes_[v].cls != nullptr && !found[v] )
      throw std::logic_error("element lost from class lists");
    int bs = block_size_[v];
    if (bs > 0) {
      auto members = block_members(static_cast<VertexId>(v));
      if (static_cast<int>(members.size()) != bs)
        throw std::logic_error("block size mismatch");
      if (block_tail_[v] != members.back())
        throw std::logic_error("block tail mismatch");
    }
  }
}

}  // namespace lextor
