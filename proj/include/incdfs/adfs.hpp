#pragma once

#include <vector>

#include "incdfs/algorithm.hpp"

namespace incdfs {

/// Incremental DFS for undirected graphs by path reversal.
///
/// A back edge only joins the graph. A cross edge (x, y), with x the deeper
/// endpoint, re-roots the subtree T(v) below LCA(x, y) that contains y at y
/// and hangs it from x. The reversal turns some back edges of T(v) into cross
/// edges; those are collected into a pending pool and re-inserted with the
/// same rule until the pool is empty. ADFS1 and ADFS2 differ only in the
/// order the pool is drained (see next_pending()).
class Adfs final : public IncrementalDfs {
 public:
  enum class Variant { Adfs1, Adfs2 };

  explicit Adfs(std::size_t n, Variant variant = Variant::Adfs1);
  /// Adopts an existing undirected graph and a valid DFS tree of it.
  Adfs(Graph graph, DfsTree tree, Variant variant = Variant::Adfs1);

  void insert(VertexId x, VertexId y) override;
  void insert_batch(std::span<const Edge> edges) override;

  const Graph& graph() const override { return graph_; }
  const DfsTree& tree() const override { return tree_; }
  const Counters& counters() const override { return counters_; }
  Algorithm kind() const override {
    return variant_ == Variant::Adfs1 ? Algorithm::Adfs1 : Algorithm::Adfs2;
  }

  Variant variant() const { return variant_; }

  /// ADFS1 only: drain the pool by the reverse of ADFS2's priority (the edge
  /// whose shallower endpoint is deepest) instead of LIFO. This is the order
  /// the ADFS1 worst-case family relies on.
  void set_adversarial_order(bool on) { adversarial_ = on; }
  bool adversarial_order() const { return adversarial_; }

  /// Drops every stored non-tree edge incident on `v`; returns how many.
  std::size_t discard_non_tree_edges(VertexId v);

  struct PendingEdge {
    VertexId x = 0;  ///< endpoint that stays put on equal depths
    VertexId y = 0;
    bool counted = false;  ///< already charged when it entered the pool
  };

  /// The pool entry drained next under the current policy (index into pool).
  static std::size_t next_pending(const std::vector<PendingEdge>& pool, const DfsTree& tree,
                                  Variant variant, bool adversarial);

 private:
  void drain();
  void reroot(VertexId x, VertexId y);

  Graph graph_;
  DfsTree tree_;
  Counters counters_;
  Variant variant_;
  bool adversarial_ = false;
  std::vector<PendingEdge> pending_;

  // Scratch, indexed by vertex; -1 outside the subtree being re-rooted.
  std::vector<int> path_index_;
  std::vector<int> hang_index_;
  std::vector<VertexId> path_;
};

}  // namespace incdfs
