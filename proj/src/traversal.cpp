#include "incdfs/traversal.hpp"

#include <algorithm>
#include <cassert>

namespace incdfs {

std::uint64_t Traversal::run(const Graph& g, VertexId root, VertexId root_parent,
                             std::size_t visit_limit) {
  assert(mark[root] == kFresh);
  preorder.clear();
  postorder.clear();
  stack_.clear();

  const bool directed = g.directed();
  std::uint64_t scanned = 0;

  auto discover = [&](VertexId v, VertexId from) {
    if (mark[v] == kOutside) touched_.push_back(v);
    mark[v] = kOpen;
    parent[v] = from;
    preorder.push_back(v);
    stack_.push_back({v, 0});
  };

  discover(root, root_parent);
  if (preorder.size() >= visit_limit) stack_.back().next = std::numeric_limits<std::uint32_t>::max();

  while (!stack_.empty()) {
    Frame& top = stack_.back();
    const VertexId v = top.v;
    const auto adj = g.out(v);
    if (top.next >= adj.size()) {
      mark[v] = kDone;
      postorder.push_back(v);
      stack_.pop_back();
      continue;
    }
    const VertexId w = adj[top.next++];
    const Mark mw = mark[w];
    if (directed || (mw != kDone && w != parent[v])) ++scanned;
    if (mw != kFresh) continue;
    discover(w, v);
    if (preorder.size() >= visit_limit) {
      // Interrupt: close everything still open in stack order.
      while (!stack_.empty()) {
        mark[stack_.back().v] = kDone;
        postorder.push_back(stack_.back().v);
        stack_.pop_back();
      }
    }
  }
  return scanned;
}

void Traversal::reset() {
  for (VertexId v : touched_) {
    mark[v] = kOutside;
    parent[v] = kNoVertex;
  }
  touched_.clear();
}

void Traversal::apply(DfsTree& tree) const {
  if (preorder.empty()) return;
  const VertexId root = preorder.front();
  const VertexId root_parent = parent[root];

  // Everything in `preorder` is rewired; an old parent outside that set keeps
  // its other children but loses this one.
  std::vector<VertexId> members(preorder.begin(), preorder.end());
  std::sort(members.begin(), members.end());
  auto member = [&](VertexId v) { return std::binary_search(members.begin(), members.end(), v); };

  const bool root_stays = tree.parent[root] == root_parent;
  for (VertexId v : preorder) {
    const VertexId old = tree.parent[v];
    if (v == root && root_stays) continue;
    if (old != kNoVertex && !member(old)) {
      auto& siblings = tree.children[old];
      siblings.erase(std::find(siblings.begin(), siblings.end(), v));
    }
  }
  for (VertexId v : preorder) tree.children[v].clear();
  for (VertexId v : preorder) {
    if (v == root) continue;
    tree.parent[v] = parent[v];
    tree.children[parent[v]].push_back(v);
  }
  if (!root_stays) {
    tree.parent[root] = root_parent;
    if (root_parent != kNoVertex) tree.children[root_parent].push_back(root);
  }
}

}  // namespace incdfs
