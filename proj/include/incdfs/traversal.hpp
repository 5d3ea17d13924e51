#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "incdfs/dfs_tree.hpp"
#include "incdfs/graph.hpp"

namespace incdfs {

/// Scratch state for partial depth-first traversals.
///
/// Callers mark the vertices a traversal may enter as `kFresh`, run(), read
/// the discovered parents and visit orders, then reset() the marks. Every
/// adjacency entry read during the run is charged to `scanned`, except that an
/// undirected edge is charged only on its first examination: the entry back to
/// the vertex we arrived from, and entries to already finished vertices, are
/// second looks at an edge already paid for.
class Traversal {
 public:
  enum Mark : std::uint8_t { kOutside = 0, kFresh = 1, kOpen = 2, kDone = 3 };

  explicit Traversal(std::size_t vertex_count = 0) { resize(vertex_count); }

  void resize(std::size_t vertex_count) {
    mark.assign(vertex_count, kOutside);
    parent.assign(vertex_count, kNoVertex);
  }

  /// Runs a DFS from `root` (which must be kFresh) whose own parent is
  /// `root_parent`. With a visit limit the traversal stops scanning as soon
  /// as that many vertices have been discovered and closes the open ones.
  std::uint64_t run(const Graph& g, VertexId root, VertexId root_parent,
                    std::size_t visit_limit = std::numeric_limits<std::size_t>::max());

  /// Returns every vertex touched by the last runs (and any marked by the
  /// caller through mark_fresh) to kOutside.
  void reset();

  void mark_fresh(VertexId v) {
    if (mark[v] == kOutside) touched_.push_back(v);
    mark[v] = kFresh;
  }

  /// Rewires `tree` so that every vertex discovered by the last run() hangs
  /// from its discovered parent, keeping discovery order among siblings.
  /// Old child lists of discovered vertices are discarded, and discovered
  /// vertices are unlinked from old parents that were not discovered. The
  /// root itself is linked to `root_parent` at the end of its child list
  /// unless it already hangs there.
  void apply(DfsTree& tree) const;

  std::vector<Mark> mark;
  std::vector<VertexId> parent;
  std::vector<VertexId> preorder;
  std::vector<VertexId> postorder;

 private:
  struct Frame {
    VertexId v;
    std::uint32_t next;
  };
  std::vector<Frame> stack_;
  std::vector<VertexId> touched_;
};

}  // namespace incdfs
