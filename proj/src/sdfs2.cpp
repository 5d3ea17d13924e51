#include "incdfs/sdfs2.hpp"

#include <stdexcept>
#include <string>

namespace incdfs {

Sdfs2::Sdfs2(std::size_t n, bool directed) : Sdfs2(Graph(n, directed), DfsTree(n)) {}

Sdfs2::Sdfs2(Graph graph, DfsTree tree)
    : graph_(std::move(graph)), tree_(std::move(tree)), walk_(graph_.n() + 1) {
  if (tree_.n() != graph_.n()) throw std::invalid_argument("tree and graph vertex counts differ");
  on_stick_.assign(graph_.n() + 1, 0);
  for (const Edge& e : graph_.edges()) remember(e.u, e.v);
  extend_stick();
}

void Sdfs2::set_duplicate_tracking(bool on) {
  track_ = on;
  if (!on) seen_.clear();
}

void Sdfs2::check(VertexId u, VertexId v) const {
  detail::check_new_edge(graph_, u, v);
  if (!track_) return;
  VertexId a = u, b = v;
  if (!graph_.directed() && a > b) std::swap(a, b);
  if (seen_.contains((static_cast<std::uint64_t>(a) << 32) | b)) {
    throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
}

void Sdfs2::remember(VertexId u, VertexId v) {
  if (!track_) return;
  if (!graph_.directed() && u > v) std::swap(u, v);
  seen_.insert((static_cast<std::uint64_t>(u) << 32) | v);
}

std::size_t Sdfs2::stored_non_tree_edges() const {
  return graph_.m() - (graph_.n() - tree_.children[kPseudoRoot].size());
}

bool Sdfs2::take(VertexId u, VertexId v) {
  remember(u, v);
  ++counters_.insertions;
  ++counters_.edges_processed;
  if (on_stick_[u] || on_stick_[v]) {
    ++discarded_;
    if (discard_) discard_(u, v);
    return false;
  }
  graph_.add_edge(u, v);
  if (graph_.directed()) {
    return tree_.dfn[u] < tree_.dfn[v] && !tree_.is_ancestor(v, u);
  }
  return !tree_.related(u, v);
}

void Sdfs2::insert(VertexId u, VertexId v) {
  check(u, v);
  if (take(u, v)) rebuild();
}

void Sdfs2::insert_batch(std::span<const Edge> edges) {
  detail::check_new_batch(graph_, edges);
  for (const Edge& e : edges) check(e.u, e.v);
  bool stale = false;
  for (const Edge& e : edges) stale = take(e.u, e.v) || stale;
  if (stale) rebuild();
}

void Sdfs2::rebuild() {
  const VertexId root = bristle_root_;
  for (VertexId v : subtree_vertices(tree_, root)) walk_.mark_fresh(v);
  counters_.edges_processed += walk_.run(graph_, root, tree_.parent[root]);
  counters_.vertices_remarked += walk_.preorder.size();
  ++counters_.rebuilds;
  walk_.apply(tree_);
  walk_.reset();
  tree_.renumber();
  extend_stick();
}

void Sdfs2::extend_stick() {
  VertexId v = bristle_root_;
  while (tree_.children[v].size() == 1) {
    const VertexId next = tree_.children[v].front();
    if (v != kPseudoRoot) {
      on_stick_[v] = 1;
      ++stick_length_;
      prune(v);
    }
    v = next;
  }
  bristle_root_ = v;
}

void Sdfs2::prune(VertexId v) {
  std::vector<Edge> drop;
  for (VertexId w : graph_.out(v)) {
    const bool tree_edge = tree_.parent[w] == v || (!graph_.directed() && tree_.parent[v] == w);
    if (!tree_edge) drop.push_back({v, w});
  }
  for (VertexId w : graph_.in(v)) {
    if (tree_.parent[v] != w) drop.push_back({w, v});
  }
  for (const Edge& e : drop) {
    graph_.remove_edge(e.u, e.v);
    ++discarded_;
    if (discard_) discard_(e.u, e.v);
  }
}

}  // namespace incdfs
