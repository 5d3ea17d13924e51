#include "incdfs/sdfs.hpp"

namespace incdfs {

Sdfs::Sdfs(std::size_t n, bool directed, bool interrupt)
    : graph_(n, directed), tree_(n), interrupt_(interrupt), walk_(n + 1) {}

void Sdfs::insert(VertexId u, VertexId v) {
  detail::check_new_edge(graph_, u, v);
  graph_.add_edge(u, v);
  ++counters_.insertions;
  ++counters_.edges_processed;
  rebuild();
}

void Sdfs::insert_batch(std::span<const Edge> edges) {
  detail::check_new_batch(graph_, edges);
  for (const Edge& e : edges) {
    graph_.add_edge(e.u, e.v);
    ++counters_.insertions;
    ++counters_.edges_processed;
  }
  rebuild();
}

void Sdfs::rebuild() {
  const std::size_t count = graph_.n() + 1;
  for (VertexId v = 0; v < count; ++v) walk_.mark_fresh(v);
  const std::size_t limit = interrupt_ ? count : std::numeric_limits<std::size_t>::max();
  counters_.edges_processed += walk_.run(graph_, kPseudoRoot, kNoVertex, limit);

  tree_.parent.assign(count, kNoVertex);
  tree_.children.assign(count, {});
  walk_.apply(tree_);
  walk_.reset();
  tree_.renumber();
  ++counters_.rebuilds;
  counters_.vertices_remarked += graph_.n();
}

}  // namespace incdfs
