#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lextor/graph.hpp"
#include "lextor/partition.hpp"
#include "lextor/slices.hpp"

namespace lextor {

/// The refinement reached a state only possible when the input is not a
/// prime comparability graph (or the caller's structures are inconsistent).
class NotPrimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PhaseCounters {
  std::uint64_t source = 0;
  std::uint64_t lbfs = 0;
  std::uint64_t slice_tree = 0;
  std::uint64_t slices = 0;
  std::uint64_t refinement = 0;
  std::uint64_t total() const {
    return source + lbfs + slice_tree + slices + refinement;
  }
};

/// Partition states recorded while the extension is computed; diagnostic
/// only and deliberately allowed to cost more than the computation itself.
struct PipelineTrace {
  std::vector<std::vector<std::vector<VertexId>>> snapshots;  // initial state,
                                                              // then one per slice
  std::vector<std::vector<VertexId>> pivots;                  // per slice
};

struct ExtensionOptions {
  /// Validate, after each slice, that every one of its active edges is
  /// separated with mutually universal endpoint classes and that the next
  /// slice holds a separated seed edge. Throws NotPrimeError on violation.
  bool check_invariants = false;
  PipelineTrace* trace = nullptr;
};

struct LinearExtensionResult {
  std::vector<VertexId> order;
  Orientation orientation;  // edge directed toward the later endpoint
  PhaseCounters counters;
};

/// A vertex whose incident edges are all directed the same way in some
/// transitive orientation, computed by repeated pivoting from the ordered
/// partition {seed}, V - {seed}. The surviving class is the one that keeps
/// the non-neighbor remainder of every split; if it holds more than one
/// vertex it is a non-trivial module and NotPrimeError is thrown.
/// Deterministic: the seed is vertex n-1 and pivots are processed in the
/// order they leave the surviving class.
VertexId source_vertex(const Graph& g, std::uint64_t* ops = nullptr);

/// Refines {x}, V - {x} into singletons, where x is the initial vertex of
/// the LBFS behind `t` (expected to be a source). For each slice, a first
/// round of targeted push/pull refinement isolates the slice's initial
/// vertex from its neighbors, then every connected vertex pivots with its
/// active neighborhood. O(n + m) plus the optional debug checks.
LinearExtensionResult linear_extension(const Graph& g, const SliceTree& t,
                                       const SliceAnnotations& a,
                                       const ExtensionOptions& opts = {});

/// Full pipeline: source vertex, LBFS from it, slice structures, extension.
/// Requires a connected graph; the result is a linear extension whenever the
/// input is a prime comparability graph (callers can verify with the oracle).
LinearExtensionResult transitive_orientation(const Graph& g,
                                             const ExtensionOptions& opts = {});

}  // namespace lextor
