#pragma once

#include "incdfs/algorithm.hpp"
#include "incdfs/traversal.hpp"

namespace incdfs {

/// Recomputes the whole DFS tree from the pseudo root after every update.
/// With `interrupt`, the traversal stops once every vertex has been visited.
class Sdfs final : public IncrementalDfs {
 public:
  Sdfs(std::size_t n, bool directed, bool interrupt);

  void insert(VertexId u, VertexId v) override;
  void insert_batch(std::span<const Edge> edges) override;

  const Graph& graph() const override { return graph_; }
  const DfsTree& tree() const override { return tree_; }
  const Counters& counters() const override { return counters_; }
  Algorithm kind() const override { return interrupt_ ? Algorithm::SdfsInt : Algorithm::Sdfs; }

  bool interrupt() const { return interrupt_; }

 private:
  void rebuild();

  Graph graph_;
  DfsTree tree_;
  Counters counters_;
  bool interrupt_;
  Traversal walk_;
};

}  // namespace incdfs
