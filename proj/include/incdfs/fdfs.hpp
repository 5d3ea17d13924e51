#pragma once

#include <vector>

#include "incdfs/algorithm.hpp"
#include "incdfs/traversal.hpp"

namespace incdfs {

/// Roots of the subtrees a partial rebuild may touch after inserting the
/// anti-cross edge (x, y), listed left to right (post-order). With w the LCA:
/// the subtrees hanging right of path(w, x) below w, then either the whole
/// subtree of w containing y (`dag == false`) or only the subtrees hanging
/// left of path(w, y) plus T(y) (`dag == true`).
/// Precondition: x and y unrelated and dfn(x) < dfn(y).
std::vector<VertexId> candidate_roots(const DfsTree& tree, VertexId x, VertexId y, bool dag);

/// All vertices of the candidate subtrees, in increasing dfn order.
std::vector<VertexId> candidate_set(const DfsTree& tree, VertexId x, VertexId y, bool dag);

/// Incremental DFS for DAGs and directed graphs driven by post-order ranks.
///
/// An edge (x, y) with dfn(x) > dfn(y), or a back edge, leaves the tree
/// alone. Otherwise it is anti-cross: the vertices of the candidate set that
/// y reaches inside it are cut out, re-traversed from y and hung from x, and
/// the ranks of the affected interval [dfn(x), max candidate rank] rewritten.
class Fdfs final : public IncrementalDfs {
 public:
  enum class Mode { Dag, Directed };

  Fdfs(std::size_t n, Mode mode);

  /// In DAG mode an edge that would close a cycle is rejected with
  /// std::invalid_argument and the state is left unchanged.
  void insert(VertexId x, VertexId y) override;

  const Graph& graph() const override { return graph_; }
  const DfsTree& tree() const override { return tree_; }
  const Counters& counters() const override { return counters_; }
  Algorithm kind() const override { return Algorithm::Fdfs; }

  Mode mode() const { return mode_; }

  /// Candidate set for inserting (x, y) into the current tree.
  std::vector<VertexId> candidate_set(VertexId x, VertexId y) const {
    return incdfs::candidate_set(tree_, x, y, mode_ == Mode::Dag);
  }

 private:
  bool reaches_x(VertexId x) const;

  Graph graph_;
  DfsTree tree_;
  Counters counters_;
  Mode mode_;
  Traversal walk_;
};

}  // namespace incdfs
