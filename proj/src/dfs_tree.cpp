#include "incdfs/dfs_tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "incdfs/traversal.hpp"

namespace incdfs {

DfsTree::DfsTree(std::size_t n)
    : parent(n + 1, kPseudoRoot),
      children(n + 1),
      depth(n + 1, 1),
      dfn(n + 1, 0),
      size(n + 1, 1),
      order(n + 2, kNoVertex) {
  parent[kPseudoRoot] = kNoVertex;
  children[kPseudoRoot].reserve(n);
  for (VertexId v = 1; v <= n; ++v) children[kPseudoRoot].push_back(v);
  renumber();
}

void DfsTree::renumber(VertexId root) {
  const std::size_t count = parent.size();
  depth.assign(count, 0);
  dfn.assign(count, 0);
  size.assign(count, 0);
  order.assign(count + 1, kNoVertex);

  struct Frame {
    VertexId v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  std::uint32_t rank = 0;
  stack.push_back({root, 0});
  size[root] = 1;
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto& kids = children[top.v];
    if (top.next < kids.size()) {
      const VertexId c = kids[top.next++];
      depth[c] = depth[top.v] + 1;
      size[c] = 1;
      stack.push_back({c, 0});
      continue;
    }
    const VertexId v = top.v;
    stack.pop_back();
    dfn[v] = ++rank;
    order[rank] = v;
    if (!stack.empty()) size[stack.back().v] += size[v];
  }
}

void DfsTree::detach(VertexId child) {
  const VertexId p = parent[child];
  if (p == kNoVertex) return;
  auto& siblings = children[p];
  siblings.erase(std::find(siblings.begin(), siblings.end(), child));
  parent[child] = kNoVertex;
}

void DfsTree::attach(VertexId child, VertexId p) {
  parent[child] = p;
  children[p].push_back(child);
}

const char* to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::Tree: return "tree";
    case EdgeClass::Back: return "back";
    case EdgeClass::Forward: return "forward";
    case EdgeClass::Cross: return "cross";
    case EdgeClass::AntiCross: return "anti-cross";
  }
  return "?";
}

DfsTree static_dfs(const Graph& g, VertexId start, const std::vector<VertexId>* restrict_to) {
  if (!g.contains(start)) {
    throw std::invalid_argument("unknown start vertex " + std::to_string(start));
  }
  const std::size_t count = g.n() + 1;
  Traversal walk(count);
  if (restrict_to != nullptr) {
    for (VertexId v : *restrict_to) {
      if (!g.contains(v)) throw std::invalid_argument("unknown vertex " + std::to_string(v));
      walk.mark_fresh(v);
    }
    if (walk.mark[start] != Traversal::kFresh) {
      throw std::invalid_argument("start vertex is not in the restriction set");
    }
  } else {
    for (VertexId v = 0; v < count; ++v) walk.mark_fresh(v);
  }
  walk.run(g, start, kNoVertex);

  DfsTree tree;
  tree.parent.assign(count, kNoVertex);
  tree.children.assign(count, {});
  walk.apply(tree);
  tree.renumber(start);
  return tree;
}

EdgeClass classify_edge(const DfsTree& tree, VertexId u, VertexId v, bool directed) {
  if (u == v) throw std::invalid_argument("classify_edge: identical endpoints");
  if (u > tree.n() || v > tree.n()) throw std::invalid_argument("classify_edge: unknown vertex");
  if (tree.parent[v] == u) return EdgeClass::Tree;
  if (!directed && tree.parent[u] == v) return EdgeClass::Tree;
  if (tree.is_ancestor(v, u)) return EdgeClass::Back;
  if (tree.is_ancestor(u, v)) return directed ? EdgeClass::Forward : EdgeClass::Back;
  if (!directed) return EdgeClass::Cross;
  return tree.dfn[v] < tree.dfn[u] ? EdgeClass::Cross : EdgeClass::AntiCross;
}

namespace {

ValidityReport fail(std::string reason) {
  ValidityReport r;
  r.ok = false;
  r.reason = std::move(reason);
  return r;
}

}  // namespace

ValidityReport is_valid_dfs_tree(const Graph& g, const DfsTree& tree) {
  const std::size_t n = g.n();
  if (tree.n() != n || tree.children.size() != n + 1 || tree.dfn.size() != n + 1) {
    throw std::invalid_argument("tree and graph vertex counts differ");
  }
  if (tree.parent[kPseudoRoot] != kNoVertex) return fail("pseudo root has a parent");

  std::size_t child_entries = 0;
  for (VertexId p = 0; p <= n; ++p) {
    for (VertexId c : tree.children[p]) {
      ++child_entries;
      if (c > n || tree.parent[c] != p) {
        return fail("child list of " + std::to_string(p) + " disagrees with parent of " + std::to_string(c));
      }
    }
  }
  for (VertexId v = 1; v <= n; ++v) {
    const VertexId p = tree.parent[v];
    if (p == kNoVertex) return fail("vertex " + std::to_string(v) + " is not spanned");
    if (p > n) return fail("vertex " + std::to_string(v) + " has an invalid parent");
    if (p != kPseudoRoot && !g.has_edge(p, v)) {
      return fail("tree edge (" + std::to_string(p) + "," + std::to_string(v) + ") is not a graph edge");
    }
  }
  if (child_entries != n) return fail("tree does not have exactly n tree edges");

  // Recompute numbering independently and compare.
  std::vector<std::uint32_t> depth(n + 1, 0), post(n + 1, 0), size(n + 1, 0);
  std::vector<std::pair<VertexId, std::size_t>> stack{{kPseudoRoot, 0}};
  std::uint32_t rank = 0;
  std::size_t reached = 1;
  size[kPseudoRoot] = 1;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < tree.children[v].size()) {
      const VertexId c = tree.children[v][next++];
      if (size[c] != 0) return fail("cycle through vertex " + std::to_string(c));
      depth[c] = depth[v] + 1;
      size[c] = 1;
      ++reached;
      stack.push_back({c, 0});
      continue;
    }
    const VertexId done = v;
    stack.pop_back();
    post[done] = ++rank;
    if (!stack.empty()) size[stack.back().first] += size[done];
  }
  if (reached != n + 1) return fail("some vertices are unreachable from the root");
  for (VertexId v = 0; v <= n; ++v) {
    if (tree.depth[v] != depth[v]) return fail("stale depth at vertex " + std::to_string(v));
    if (tree.dfn[v] != post[v]) return fail("dfn is not the post-order at vertex " + std::to_string(v));
    if (tree.size[v] != size[v]) return fail("stale subtree size at vertex " + std::to_string(v));
  }

  const bool directed = g.directed();
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v : g.out(u)) {
      if (!directed && v < u) continue;
      const EdgeClass c = classify_edge(tree, u, v, directed);
      if (c == EdgeClass::AntiCross || (!directed && c == EdgeClass::Cross)) {
        ValidityReport r = fail(std::string(to_string(c)) + " edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
        r.edge = Edge{u, v};
        r.edge_class = c;
        return r;
      }
    }
  }
  return {};
}

LcaBranches lca_branches(const DfsTree& tree, VertexId u, VertexId v) {
  if (!tree.spans(u) || !tree.spans(v)) throw std::invalid_argument("lca: vertex not in tree");
  LcaBranches out;
  VertexId a = u;
  VertexId b = v;
  while (tree.depth[a] > tree.depth[b]) {
    out.under_u = a;
    a = tree.parent[a];
  }
  while (tree.depth[b] > tree.depth[a]) {
    out.under_v = b;
    b = tree.parent[b];
  }
  while (a != b) {
    out.under_u = a;
    out.under_v = b;
    a = tree.parent[a];
    b = tree.parent[b];
  }
  out.lca = a;
  if (u == a) out.under_u = kNoVertex;
  if (v == a) out.under_v = kNoVertex;
  return out;
}

VertexId lca(const DfsTree& tree, VertexId u, VertexId v) { return lca_branches(tree, u, v).lca; }

StickProfile stick_profile(const DfsTree& tree) {
  StickProfile p;
  if (tree.children[kPseudoRoot].size() == 1) {
    VertexId cur = tree.children[kPseudoRoot].front();
    while (tree.children[cur].size() == 1) {
      ++p.length;
      cur = tree.children[cur].front();
    }
    p.bristle_root = cur;
  }
  p.bristle_size = tree.n() - p.length;
  return p;
}

std::vector<VertexId> stick_vertices(const DfsTree& tree) {
  std::vector<VertexId> out;
  if (tree.children[kPseudoRoot].size() != 1) return out;
  VertexId cur = tree.children[kPseudoRoot].front();
  while (tree.children[cur].size() == 1) {
    out.push_back(cur);
    cur = tree.children[cur].front();
  }
  return out;
}

std::vector<VertexId> subtree_vertices(const DfsTree& tree, VertexId root) {
  std::vector<VertexId> out;
  std::vector<VertexId> stack{root};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    out.push_back(v);
    const auto& kids = tree.children[v];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

BristleTwin extract_bristles(const Graph& g, const DfsTree& tree) {
  const StickProfile prof = stick_profile(tree);
  std::vector<VertexId> members = subtree_vertices(tree, prof.bristle_root);
  if (prof.bristle_root == kPseudoRoot) members.erase(members.begin());
  std::sort(members.begin(), members.end());

  BristleTwin twin;
  const std::size_t k = members.size();
  twin.to_twin.assign(g.n() + 1, kNoVertex);
  twin.from_twin.assign(k + 1, kNoVertex);
  twin.to_twin[kPseudoRoot] = kPseudoRoot;
  twin.from_twin[kPseudoRoot] = kPseudoRoot;
  for (std::size_t i = 0; i < k; ++i) {
    twin.to_twin[members[i]] = static_cast<VertexId>(i + 1);
    twin.from_twin[i + 1] = members[i];
  }

  auto remap = [&](std::span<const VertexId> list) {
    std::vector<VertexId> mapped;
    for (VertexId w : list) {
      if (w != kPseudoRoot && twin.to_twin[w] != kNoVertex) mapped.push_back(twin.to_twin[w]);
    }
    return mapped;
  };
  std::vector<std::vector<VertexId>> out(k + 1), in;
  if (g.directed()) in.resize(k + 1);
  for (std::size_t i = 1; i <= k; ++i) {
    out[i] = remap(g.out(twin.from_twin[i]));
    if (g.directed()) in[i] = remap(g.in(twin.from_twin[i]));
  }
  twin.graph = Graph::from_adjacency(k, g.directed(), std::move(out), std::move(in));

  twin.tree.parent.assign(k + 1, kNoVertex);
  twin.tree.children.assign(k + 1, {});
  if (prof.bristle_root == kPseudoRoot) {
    for (VertexId c : tree.children[kPseudoRoot]) twin.tree.attach(twin.to_twin[c], kPseudoRoot);
  } else {
    twin.tree.attach(twin.to_twin[prof.bristle_root], kPseudoRoot);
  }
  for (std::size_t i = 1; i <= k; ++i) {
    for (VertexId c : tree.children[twin.from_twin[i]]) {
      twin.tree.attach(twin.to_twin[c], static_cast<VertexId>(i));
    }
  }
  twin.tree.renumber();
  return twin;
}

}  // namespace incdfs
