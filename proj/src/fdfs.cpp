#include "incdfs/fdfs.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace incdfs {

std::vector<VertexId> candidate_roots(const DfsTree& tree, VertexId x, VertexId y, bool dag) {
  const LcaBranches br = lca_branches(tree, x, y);
  if (br.under_u == kNoVertex || br.under_v == kNoVertex) {
    throw std::invalid_argument("candidate set requires unrelated endpoints");
  }
  std::vector<VertexId> roots;

  // Right of path(w, x), bottom-up.
  VertexId prev = x;
  for (VertexId a = tree.parent[x]; a != br.lca; prev = a, a = tree.parent[a]) {
    const auto& kids = tree.children[a];
    auto it = std::find(kids.begin(), kids.end(), prev);
    roots.insert(roots.end(), it + 1, kids.end());
  }
  {
    const auto& kids = tree.children[br.lca];
    auto from = std::find(kids.begin(), kids.end(), br.under_u);
    auto to = std::find(kids.begin(), kids.end(), br.under_v);
    roots.insert(roots.end(), from + 1, to);
  }

  if (!dag) {
    roots.push_back(br.under_v);
    return roots;
  }
  // Left of path(w, y), top-down, then T(y).
  std::vector<VertexId> path;
  for (VertexId a = y; a != br.lca; a = tree.parent[a]) path.push_back(a);
  std::reverse(path.begin(), path.end());
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const auto& kids = tree.children[path[i]];
    auto to = std::find(kids.begin(), kids.end(), path[i + 1]);
    roots.insert(roots.end(), kids.begin(), to);
  }
  roots.push_back(y);
  return roots;
}

std::vector<VertexId> candidate_set(const DfsTree& tree, VertexId x, VertexId y, bool dag) {
  std::vector<VertexId> out;
  for (VertexId r : candidate_roots(tree, x, y, dag)) {
    const auto part = subtree_vertices(tree, r);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end(), [&](VertexId a, VertexId b) { return tree.dfn[a] < tree.dfn[b]; });
  return out;
}

Fdfs::Fdfs(std::size_t n, Mode mode) : graph_(n, true), tree_(n), mode_(mode), walk_(n + 1) {}

bool Fdfs::reaches_x(VertexId x) const {
  // Every edge of a DAG points to a lower rank under a valid DFS tree, so a
  // path from y to x that leaves the candidate set must step onto x or one of
  // its ancestors.
  for (VertexId v : walk_.preorder) {
    for (VertexId w : graph_.out(v)) {
      if (walk_.mark[w] == Traversal::kOutside && tree_.is_ancestor(w, x)) return true;
    }
  }
  return false;
}

void Fdfs::insert(VertexId x, VertexId y) {
  detail::check_new_edge(graph_, x, y);
  const bool anti_cross = tree_.dfn[x] < tree_.dfn[y] && !tree_.is_ancestor(y, x);
  if (!anti_cross) {
    if (mode_ == Mode::Dag && tree_.is_ancestor(y, x)) {
      throw std::invalid_argument("edge (" + std::to_string(x) + "," + std::to_string(y) +
                                  ") closes a cycle");
    }
    graph_.add_edge(x, y);
    ++counters_.insertions;
    ++counters_.edges_processed;
    return;
  }

  const std::vector<VertexId> roots = candidate_roots(tree_, x, y, mode_ == Mode::Dag);
  for (VertexId r : roots) {
    for (VertexId v : subtree_vertices(tree_, r)) walk_.mark_fresh(v);
  }
  const std::uint64_t scanned = walk_.run(graph_, y, x);
  if (mode_ == Mode::Dag && reaches_x(x)) {
    walk_.reset();
    throw std::invalid_argument("edge (" + std::to_string(x) + "," + std::to_string(y) +
                                ") closes a cycle");
  }
  graph_.add_edge(x, y);
  ++counters_.insertions;
  counters_.edges_processed += 1 + scanned;
  ++counters_.rebuilds;
  counters_.vertices_remarked += walk_.preorder.size();

  // New ranks for [dfn(x), hi]: the re-hung vertices in their new post-order,
  // then x, then the untouched rest of the interval in its old order.
  const std::uint32_t lo = tree_.dfn[x];
  const std::uint32_t hi = tree_.dfn[roots.back()];
  std::vector<VertexId> seq(walk_.postorder.begin(), walk_.postorder.end());
  seq.push_back(x);
  for (std::uint32_t r = lo + 1; r <= hi; ++r) {
    const VertexId v = tree_.order[r];
    if (walk_.mark[v] != Traversal::kDone) seq.push_back(v);
  }

  const VertexId old_y_parent = tree_.parent[y];
  const VertexId top = mode_ == Mode::Dag ? lca(tree_, x, y) : old_y_parent;
  walk_.apply(tree_);
  for (VertexId v : walk_.preorder) tree_.depth[v] = tree_.depth[tree_.parent[v]] + 1;
  for (std::uint32_t i = 0; i < seq.size(); ++i) {
    tree_.dfn[seq[i]] = lo + i;
    tree_.order[lo + i] = seq[i];
  }
  for (std::uint32_t r = lo; r <= hi; ++r) {
    const VertexId v = tree_.order[r];
    std::uint32_t s = 1;
    for (VertexId c : tree_.children[v]) s += tree_.size[c];
    tree_.size[v] = s;
  }
  // In DAG mode the ancestors of the old position of y sit above the
  // interval and lost whatever moved under x.
  for (VertexId a = old_y_parent; a != top; a = tree_.parent[a]) {
    std::uint32_t s = 1;
    for (VertexId c : tree_.children[a]) s += tree_.size[c];
    tree_.size[a] = s;
  }
  walk_.reset();
}

}  // namespace incdfs
