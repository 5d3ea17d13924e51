#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string_view>

#include "incdfs/dfs_tree.hpp"
#include "incdfs/graph.hpp"

namespace incdfs {

enum class Algorithm { Sdfs, SdfsInt, Fdfs, Adfs1, Adfs2, Sdfs2, Sdfs3 };

enum class GraphMode { Undirected, Directed, Dag };

std::string_view to_string(Algorithm a);
std::string_view to_string(GraphMode m);
std::optional<Algorithm> parse_algorithm(std::string_view name);
std::optional<GraphMode> parse_mode(std::string_view name);

inline bool is_directed(GraphMode m) { return m != GraphMode::Undirected; }

/// Whether `a` maintains trees for graphs of kind `m`. ADFS is undirected
/// only; FDFS is directed only.
bool supports(Algorithm a, GraphMode m);

/// FDFS and SDFS3 process batches edge by edge.
bool supports_batches(Algorithm a);

/// An incrementally maintained DFS tree rooted at the pseudo root.
///
/// Between public calls tree() is a valid DFS tree of every edge inserted so
/// far, with fresh numbering. graph() is the edge set the algorithm retains,
/// which for SDFS2 excludes the discarded stick-incident edges.
class IncrementalDfs {
 public:
  virtual ~IncrementalDfs() = default;

  /// Inserts the edge (u, v). Throws std::invalid_argument for self-loops,
  /// duplicates, unknown vertices, or an edge the algorithm cannot accept.
  virtual void insert(VertexId u, VertexId v) = 0;

  /// Inserts all edges, then updates the tree once where the algorithm
  /// supports it. The default processes edges one at a time.
  virtual void insert_batch(std::span<const Edge> edges);

  virtual const Graph& graph() const = 0;
  virtual const DfsTree& tree() const = 0;
  virtual const Counters& counters() const = 0;
  virtual Algorithm kind() const = 0;
};

std::unique_ptr<IncrementalDfs> make_algorithm(Algorithm a, std::size_t n, GraphMode mode);

namespace detail {
/// Rejects self-loops and duplicates as well as non-real vertices.
void check_new_edge(const Graph& g, VertexId u, VertexId v);
/// check_new_edge() for a whole batch, including duplicates inside it.
void check_new_batch(const Graph& g, std::span<const Edge> edges);
}  // namespace detail

}  // namespace incdfs
