#pragma once

#include <functional>
#include <unordered_set>
#include <vector>

#include "incdfs/algorithm.hpp"
#include "incdfs/traversal.hpp"

namespace incdfs {

/// Static DFS restricted to the bristles of the broomstick.
///
/// The stick (see stick_profile()) never changes again once formed: every
/// stick vertex is an ancestor of every vertex below it, so an edge touching
/// the stick conforms to any tree that keeps it. Such edges are dropped, and
/// non-tree edges of vertices that join the stick are pruned. Other edges are
/// stored; one that conflicts with the tree (undirected: unrelated endpoints,
/// directed: anti-cross) triggers a DFS over the bristles from the bristle
/// root, or from the pseudo root while there is no stick.
class Sdfs2 final : public IncrementalDfs {
 public:
  /// Called with (from, to) for every edge dropped or pruned.
  using DiscardHook = std::function<void(VertexId, VertexId)>;

  Sdfs2(std::size_t n, bool directed);
  /// Adopts a graph and a valid DFS tree of it; prunes stick edges at once.
  Sdfs2(Graph graph, DfsTree tree);

  void insert(VertexId u, VertexId v) override;
  void insert_batch(std::span<const Edge> edges) override;

  /// Retained edges only.
  const Graph& graph() const override { return graph_; }
  const DfsTree& tree() const override { return tree_; }
  const Counters& counters() const override { return counters_; }
  Algorithm kind() const override { return Algorithm::Sdfs2; }

  bool on_stick(VertexId v) const { return on_stick_[v] != 0; }
  VertexId bristle_root() const { return bristle_root_; }
  std::size_t stick_length() const { return stick_length_; }

  /// Retained real edges that are not tree edges.
  std::size_t stored_non_tree_edges() const;
  /// Edges dropped on arrival or pruned later because they touch the stick.
  std::uint64_t discarded_edges() const { return discarded_; }

  void set_discard_hook(DiscardHook hook) { discard_ = std::move(hook); }

  /// Remembering every inserted edge lets duplicates of dropped edges be
  /// rejected; a memory-bounded caller that guarantees a simple stream can
  /// switch it off.
  void set_duplicate_tracking(bool on);

 private:
  /// Accepts the edge into the graph or drops it; true when the tree must be
  /// rebuilt.
  bool take(VertexId u, VertexId v);
  void check(VertexId u, VertexId v) const;
  void remember(VertexId u, VertexId v);
  void rebuild();
  /// Extends the stick below the bristle root and prunes the new members.
  void extend_stick();
  void prune(VertexId v);

  Graph graph_;
  DfsTree tree_;
  Counters counters_;
  Traversal walk_;
  std::vector<std::uint8_t> on_stick_;
  VertexId bristle_root_ = kPseudoRoot;
  std::size_t stick_length_ = 0;
  std::uint64_t discarded_ = 0;
  DiscardHook discard_;
  bool track_ = true;
  std::unordered_set<std::uint64_t> seen_;
};

}  // namespace incdfs
