#include "incdfs/adfs.hpp"

#include <stdexcept>
#include <tuple>

namespace incdfs {

Adfs::Adfs(std::size_t n, Variant variant) : Adfs(Graph(n, false), DfsTree(n), variant) {}

Adfs::Adfs(Graph graph, DfsTree tree, Variant variant)
    : graph_(std::move(graph)), tree_(std::move(tree)), variant_(variant) {
  if (graph_.directed()) throw std::invalid_argument("ADFS requires an undirected graph");
  if (tree_.n() != graph_.n()) throw std::invalid_argument("tree and graph vertex counts differ");
  path_index_.assign(graph_.n() + 1, -1);
  hang_index_.assign(graph_.n() + 1, -1);
}

void Adfs::insert(VertexId x, VertexId y) {
  const Edge e{x, y};
  insert_batch(std::span<const Edge>(&e, 1));
}

void Adfs::insert_batch(std::span<const Edge> edges) {
  detail::check_new_batch(graph_, edges);
  for (const Edge& e : edges) {
    graph_.add_edge(e.u, e.v);
    ++counters_.insertions;
    ++counters_.edges_processed;
  }
  for (const Edge& e : edges) {
    if (!tree_.related(e.u, e.v)) pending_.push_back({e.u, e.v, true});
  }
  if (pending_.empty()) return;
  ++counters_.rebuilds;
  drain();
}

std::size_t Adfs::next_pending(const std::vector<PendingEdge>& pool, const DfsTree& tree,
                               Variant variant, bool adversarial) {
  if (variant == Variant::Adfs1 && !adversarial) return pool.size() - 1;
  std::size_t best = 0;
  if (variant == Variant::Adfs1) {
    // The reverse of ADFS2: the edge whose shallower endpoint lies deepest;
    // later entries win ties.
    std::uint32_t best_depth = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const std::uint32_t d = std::min(tree.depth[pool[i].x], tree.depth[pool[i].y]);
      if (d >= best_depth) {
        best_depth = d;
        best = i;
      }
    }
    return best;
  }
  // ADFS2: the edge whose shallower endpoint is closest to the root, then by
  // that endpoint's id, then by the other endpoint's id.
  auto key = [&](const PendingEdge& e) {
    VertexId hi = e.x, lo = e.y;
    if (tree.depth[lo] < tree.depth[hi] || (tree.depth[lo] == tree.depth[hi] && lo < hi)) std::swap(hi, lo);
    return std::make_tuple(tree.depth[hi], hi, lo);
  };
  auto best_key = key(pool[0]);
  for (std::size_t i = 1; i < pool.size(); ++i) {
    const auto k = key(pool[i]);
    if (k < best_key) {
      best_key = k;
      best = i;
    }
  }
  return best;
}

void Adfs::drain() {
  while (!pending_.empty()) {
    const std::size_t i = next_pending(pending_, tree_, variant_, adversarial_);
    const PendingEdge e = pending_[i];
    pending_.erase(pending_.begin() + static_cast<std::ptrdiff_t>(i));
    if (!e.counted) ++counters_.edges_processed;
    if (tree_.related(e.x, e.y)) continue;
    reroot(e.x, e.y);
  }
}

void Adfs::reroot(VertexId x, VertexId y) {
  if (tree_.depth[x] < tree_.depth[y]) std::swap(x, y);
  const LcaBranches br = lca_branches(tree_, x, y);
  const VertexId v = br.under_v;

  path_.clear();
  for (VertexId a = y;; a = tree_.parent[a]) {
    path_index_[a] = static_cast<int>(path_.size());
    path_.push_back(a);
    if (a == v) break;
  }

  // Each vertex of T(v) remembers the path vertex it hangs from.
  const std::vector<VertexId> members = subtree_vertices(tree_, v);
  for (VertexId a : members) {
    hang_index_[a] = path_index_[a] >= 0 ? path_index_[a] : hang_index_[tree_.parent[a]];
  }

  // After reversal p_j becomes a descendant of p_i for i < j, so a back edge
  // from a non-path vertex hanging at p_i up to p_j turns into a cross edge.
  for (std::size_t j = 1; j < path_.size(); ++j) {
    for (VertexId b : graph_.out(path_[j])) {
      if (hang_index_[b] < 0) continue;
      ++counters_.edges_processed;
      if (path_index_[b] < 0 && hang_index_[b] < static_cast<int>(j)) {
        pending_.push_back({path_[j], b, false});
      }
    }
  }

  tree_.detach(v);
  for (std::size_t i = 1; i < path_.size(); ++i) tree_.detach(path_[i - 1]);
  for (std::size_t i = 1; i < path_.size(); ++i) tree_.attach(path_[i], path_[i - 1]);
  tree_.attach(y, x);
  tree_.renumber();

  for (VertexId a : members) {
    hang_index_[a] = -1;
    path_index_[a] = -1;
  }
  counters_.vertices_remarked += members.size();
}

std::size_t Adfs::discard_non_tree_edges(VertexId v) {
  std::vector<VertexId> drop;
  for (VertexId w : graph_.out(v)) {
    if (tree_.parent[v] != w && tree_.parent[w] != v) drop.push_back(w);
  }
  for (VertexId w : drop) graph_.remove_edge(v, w);
  return drop.size();
}

}  // namespace incdfs
