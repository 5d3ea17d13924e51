#pragma once

#include <vector>

#include "incdfs/algorithm.hpp"
#include "incdfs/traversal.hpp"

namespace incdfs {

/// Incremental DFS by partial rebuilds of the affected subtrees.
///
/// Undirected: for a cross edge (x, y) with LCA w, let T1 and T2 be the
/// subtrees of w's children containing x and y. The smaller one (T2 on a
/// tie, found by traversing both in lockstep) is cut off and re-traversed
/// from its endpoint of the edge, hanging from the other endpoint.
///
/// Directed and DAG: for an anti-cross edge (x, y), the candidate subtrees
/// (see candidate_roots()) are detached, a DFS from y hung under x absorbs
/// what it reaches, and every untouched part is re-traversed from its old
/// root, which keeps its old parent and place among its siblings.
class Sdfs3 final : public IncrementalDfs {
 public:
  Sdfs3(std::size_t n, GraphMode mode);

  void insert(VertexId x, VertexId y) override;

  const Graph& graph() const override { return graph_; }
  const DfsTree& tree() const override { return tree_; }
  const Counters& counters() const override { return counters_; }
  Algorithm kind() const override { return Algorithm::Sdfs3; }

  GraphMode mode() const { return mode_; }

 private:
  void insert_undirected(VertexId x, VertexId y);
  void insert_directed(VertexId x, VertexId y);
  /// Walks T(a) and T(b) one vertex at a time each; true when T(a) is
  /// strictly smaller. Vertices touched are charged to vertices_remarked.
  bool strictly_smaller(VertexId a, VertexId b);
  /// Re-traverses T(sub) from `from` and hangs the result under `to`.
  void rebuild_subtree(VertexId sub, VertexId from, VertexId to);

  Graph graph_;
  DfsTree tree_;
  Counters counters_;
  GraphMode mode_;
  Traversal walk_;
  std::vector<VertexId> stack_a_, stack_b_;
};

}  // namespace incdfs
