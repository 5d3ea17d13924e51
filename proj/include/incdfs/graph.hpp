#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace incdfs {

/// Vertex index. Index 0 is the pseudo root; real vertices are 1..n.
using VertexId = std::uint32_t;

inline constexpr VertexId kPseudoRoot = 0;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Adjacency structure over real vertices 1..n plus the pseudo root.
///
/// The pseudo root's out-list holds every real vertex in index order. The
/// reverse pseudo edges (v, s) are implied rather than stored: has_edge()
/// reports them, but real vertices' adjacency lists only carry real edges.
/// Neighbors are kept in insertion order, which fixes every DFS scan order.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, bool directed);

  /// Builds a graph whose real adjacency lists are exactly `out` (and `in`
  /// for directed graphs), preserving per-vertex order. Lists are indexed by
  /// vertex; entry 0 is ignored.
  static Graph from_adjacency(std::size_t n, bool directed,
                              std::vector<std::vector<VertexId>> out,
                              std::vector<std::vector<VertexId>> in = {});

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  bool directed() const { return directed_; }

  bool contains(VertexId v) const { return v <= n_; }
  bool has_edge(VertexId u, VertexId v) const;

  /// Appends a real edge. Throws std::invalid_argument on self-loops,
  /// duplicates, the pseudo root, or unknown vertices.
  void add_edge(VertexId u, VertexId v);

  /// Removes a real edge if present. Used to prune edges that can never
  /// influence the tree again; not a general deletion facility.
  bool remove_edge(VertexId u, VertexId v);

  /// Out-neighbors (undirected: all neighbors).
  std::span<const VertexId> out(VertexId v) const { return out_[v]; }
  /// In-neighbors. Empty for undirected graphs.
  std::span<const VertexId> in(VertexId v) const {
    return directed_ ? std::span<const VertexId>(in_[v]) : std::span<const VertexId>();
  }

  std::size_t degree(VertexId v) const { return out_[v].size(); }

  /// Every real edge once, in a deterministic order (by source vertex, then
  /// adjacency order; undirected edges reported with u < v).
  std::vector<Edge> edges() const;

 private:
  std::uint64_t key(VertexId u, VertexId v) const;
  void check_real(VertexId v) const;

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  bool directed_ = false;
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
  std::unordered_set<std::uint64_t> keys_;
};

/// Instrumentation shared by every algorithm.
struct Counters {
  std::uint64_t edges_processed = 0;
  std::uint64_t rebuilds = 0;
  std::uint64_t insertions = 0;
  std::uint64_t vertices_remarked = 0;

  friend bool operator==(const Counters&, const Counters&) = default;
};

}  // namespace incdfs
