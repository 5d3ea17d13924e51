#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "incdfs/adfs.hpp"
#include "incdfs/sdfs2.hpp"

namespace incdfs {

/// Single-pass DFS maintenance that never stores an edge touching the stick.
///
/// Undirected streams drive ADFS1; directed streams drive SDFS2. Every
/// dropped edge with a stick endpoint is either a forward edge (implied by
/// the tree path) or a back edge. For the latter only the highest target per
/// source vertex is remembered, which is enough to answer strong
/// connectivity queries exactly.
class StreamState {
 public:
  StreamState(std::size_t n, bool directed);

  /// Consumes one stream element. Self-loops and repeats of retained edges
  /// are dropped and counted; repeats of dropped edges are dropped again.
  void stream_edge(VertexId u, VertexId v);

  /// Strongly connected components of everything streamed so far, each
  /// sorted, ordered by their smallest member. Directed streams only.
  std::vector<std::vector<VertexId>> scc_query() const;

  bool directed() const { return directed_; }
  std::size_t n() const { return n_; }
  const DfsTree& tree() const;
  const Graph& retained_graph() const;
  const Counters& counters() const;

  /// Stored non-tree edges now / at most so far.
  std::size_t retained_edges() const;
  std::size_t peak_retained() const { return peak_; }
  std::uint64_t streamed() const { return streamed_; }
  std::uint64_t dropped() const { return dropped_; }
  std::uint64_t duplicates() const { return duplicates_; }

  bool on_stick(VertexId v) const;
  /// Highest (minimum-depth) stick ancestor that `v` has a dropped edge to.
  std::optional<VertexId> highest_back(VertexId v) const;

 private:
  void extend_stick();
  void remember_back(VertexId from, VertexId to);

  std::size_t n_;
  bool directed_;
  std::unique_ptr<Adfs> adfs_;
  std::unique_ptr<Sdfs2> sdfs2_;
  std::vector<std::uint8_t> stick_;  // undirected only; SDFS2 tracks its own
  VertexId bristle_root_ = kPseudoRoot;
  std::vector<VertexId> highest_;
  std::size_t peak_ = 0;
  std::uint64_t streamed_ = 0, dropped_ = 0, duplicates_ = 0;
};

}  // namespace incdfs
