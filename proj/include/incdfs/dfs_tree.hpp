#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "incdfs/graph.hpp"

namespace incdfs {

/// Rooted ordered tree over vertices 0..n, rooted at the pseudo root.
///
/// `dfn` is the post-order rank (1..n+1, the root gets n+1) and `order` its
/// inverse. `size` is the subtree size. depth/dfn/size/order are derived
/// from parent/children and are refreshed by renumber(); the algorithms keep
/// them current between public calls so ancestor tests are O(1).
struct DfsTree {
  DfsTree() = default;
  /// A star: every real vertex a child of the root, in index order.
  explicit DfsTree(std::size_t n);

  std::vector<VertexId> parent;
  std::vector<std::vector<VertexId>> children;
  std::vector<std::uint32_t> depth;
  std::vector<std::uint32_t> dfn;
  std::vector<std::uint32_t> size;
  std::vector<VertexId> order;

  std::size_t n() const { return parent.empty() ? 0 : parent.size() - 1; }
  bool spans(VertexId v) const { return v == kPseudoRoot || parent[v] != kNoVertex; }

  /// True when `a` is `d` or a proper ancestor of it. Requires fresh numbering.
  bool is_ancestor(VertexId a, VertexId d) const {
    return dfn[d] <= dfn[a] && dfn[d] + size[a] > dfn[a];
  }
  bool related(VertexId a, VertexId b) const { return is_ancestor(a, b) || is_ancestor(b, a); }

  /// Recomputes depth, dfn, size and order from parent/children, starting at
  /// `root`. Vertices not reachable from it keep depth/dfn/size 0.
  void renumber(VertexId root = kPseudoRoot);

  /// Removes `child` from its parent's child list and clears its parent.
  void detach(VertexId child);
  /// Appends `child` as the last child of `p`.
  void attach(VertexId child, VertexId p);
};

enum class EdgeClass { Tree, Back, Forward, Cross, AntiCross };

const char* to_string(EdgeClass c);

/// DFS from `start` following adjacency order. With `restrict_to`, only those
/// vertices are visited (start must be among them); the others stay
/// detached. Children are ordered by discovery, dfn by post-order.
DfsTree static_dfs(const Graph& g, VertexId start = kPseudoRoot,
                   const std::vector<VertexId>* restrict_to = nullptr);

/// Classifies (u, v) against `tree`. Requires fresh numbering.
EdgeClass classify_edge(const DfsTree& tree, VertexId u, VertexId v, bool directed);

struct ValidityReport {
  bool ok = true;
  std::string reason;
  std::optional<Edge> edge;
  EdgeClass edge_class = EdgeClass::Tree;

  explicit operator bool() const { return ok; }
};

/// Checks the structural invariants of `tree` (parents, depths, post-order
/// numbering, spanning) and that no edge of `g` is AntiCross (directed) or
/// Cross (undirected). Reports the first violation in vertex/adjacency order.
/// Throws std::invalid_argument when vertex counts differ.
ValidityReport is_valid_dfs_tree(const Graph& g, const DfsTree& tree);

/// Lowest common ancestor by a depth-aligned parent walk.
VertexId lca(const DfsTree& tree, VertexId u, VertexId v);

struct LcaBranches {
  VertexId lca = kNoVertex;
  VertexId under_u = kNoVertex;  ///< child of lca on the path to u (or none)
  VertexId under_v = kNoVertex;  ///< child of lca on the path to v (or none)
};

/// lca() that also reports the two children of the LCA leading to u and v.
LcaBranches lca_branches(const DfsTree& tree, VertexId u, VertexId v);

/// Broomstick measurements. The stick is the maximal chain below the root
/// through vertices with exactly one child; `length` counts its real
/// vertices. The first vertex with zero or several children is the bristle
/// root; the bristles are its subtree (everything when it is the root).
struct StickProfile {
  std::size_t length = 0;
  std::size_t bristle_size = 0;
  VertexId bristle_root = kPseudoRoot;
};

StickProfile stick_profile(const DfsTree& tree);

/// Real vertices on the stick, from the root downwards.
std::vector<VertexId> stick_vertices(const DfsTree& tree);

/// Vertices of T(root) in preorder.
std::vector<VertexId> subtree_vertices(const DfsTree& tree, VertexId root);

/// The bristle-induced sub-state: bristle vertices relabelled 1..k in
/// increasing id order, per-vertex adjacency order preserved, tree shape
/// preserved with the bristle root hung from the pseudo root.
struct BristleTwin {
  Graph graph;
  DfsTree tree;
  std::vector<VertexId> to_twin;    ///< original id -> twin id (kNoVertex outside)
  std::vector<VertexId> from_twin;  ///< twin id -> original id
};

BristleTwin extract_bristles(const Graph& g, const DfsTree& tree);

}  // namespace incdfs
