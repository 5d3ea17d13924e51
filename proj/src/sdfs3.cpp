#include "incdfs/sdfs3.hpp"

#include <stdexcept>
#include <string>

#include "incdfs/fdfs.hpp"

namespace incdfs {

Sdfs3::Sdfs3(std::size_t n, GraphMode mode)
    : graph_(n, is_directed(mode)), tree_(n), mode_(mode), walk_(n + 1) {}

void Sdfs3::insert(VertexId x, VertexId y) {
  detail::check_new_edge(graph_, x, y);
  if (mode_ == GraphMode::Undirected) {
    insert_undirected(x, y);
  } else {
    insert_directed(x, y);
  }
}

bool Sdfs3::strictly_smaller(VertexId a, VertexId b) {
  stack_a_.assign(1, a);
  stack_b_.assign(1, b);
  auto step = [&](std::vector<VertexId>& st) {
    const VertexId v = st.back();
    st.pop_back();
    const auto& kids = tree_.children[v];
    st.insert(st.end(), kids.rbegin(), kids.rend());
    ++counters_.vertices_remarked;
    return st.empty();
  };
  for (;;) {
    const bool a_done = step(stack_a_);
    const bool b_done = step(stack_b_);
    if (b_done) return false;  // equal sizes also land here
    if (a_done) return true;
  }
}

void Sdfs3::rebuild_subtree(VertexId sub, VertexId from, VertexId to) {
  for (VertexId v : subtree_vertices(tree_, sub)) walk_.mark_fresh(v);
  counters_.edges_processed += walk_.run(graph_, from, to);
  counters_.vertices_remarked += walk_.preorder.size();
  ++counters_.rebuilds;
  walk_.apply(tree_);
  walk_.reset();
  tree_.renumber();
}

void Sdfs3::insert_undirected(VertexId x, VertexId y) {
  graph_.add_edge(x, y);
  ++counters_.insertions;
  ++counters_.edges_processed;
  if (tree_.related(x, y)) return;
  const LcaBranches br = lca_branches(tree_, x, y);
  if (strictly_smaller(br.under_u, br.under_v)) {
    rebuild_subtree(br.under_u, x, y);
  } else {
    rebuild_subtree(br.under_v, y, x);
  }
}

void Sdfs3::insert_directed(VertexId x, VertexId y) {
  const bool anti_cross = tree_.dfn[x] < tree_.dfn[y] && !tree_.is_ancestor(y, x);
  if (!anti_cross) {
    if (mode_ == GraphMode::Dag && tree_.is_ancestor(y, x)) {
      throw std::invalid_argument("edge (" + std::to_string(x) + "," + std::to_string(y) +
                                  ") closes a cycle");
    }
    graph_.add_edge(x, y);
    ++counters_.insertions;
    ++counters_.edges_processed;
    return;
  }

  const std::vector<VertexId> roots = candidate_roots(tree_, x, y, mode_ == GraphMode::Dag);
  std::vector<VertexId> old_parent;
  old_parent.reserve(roots.size());
  for (VertexId r : roots) {
    old_parent.push_back(tree_.parent[r]);
    for (VertexId v : subtree_vertices(tree_, r)) walk_.mark_fresh(v);
  }

  std::uint64_t scanned = walk_.run(graph_, y, x);
  if (mode_ == GraphMode::Dag) {
    // Edges of a DAG only lower the rank, so y reaches x exactly when the
    // traversal steps out of the candidates onto x or one of its ancestors.
    for (VertexId v : walk_.preorder) {
      for (VertexId w : graph_.out(v)) {
        if (walk_.mark[w] == Traversal::kOutside && tree_.is_ancestor(w, x)) {
          walk_.reset();
          throw std::invalid_argument("edge (" + std::to_string(x) + "," + std::to_string(y) +
                                      ") closes a cycle");
        }
      }
    }
  }
  graph_.add_edge(x, y);
  ++counters_.insertions;
  ++counters_.edges_processed;
  ++counters_.rebuilds;

  std::size_t remarked = walk_.preorder.size();
  walk_.apply(tree_);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const VertexId r = roots[i];
    if (walk_.mark[r] != Traversal::kFresh) continue;
    // The root keeps its old parent, so apply() leaves it in place.
    scanned += walk_.run(graph_, r, old_parent[i]);
    remarked += walk_.preorder.size();
    walk_.apply(tree_);
  }
  walk_.reset();
  tree_.renumber();
  counters_.edges_processed += scanned;
  counters_.vertices_remarked += remarked;
}

}  // namespace incdfs
