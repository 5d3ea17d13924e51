#include "incdfs/streaming.hpp"

#include <algorithm>
#include <stdexcept>

namespace incdfs {

StreamState::StreamState(std::size_t n, bool directed) : n_(n), directed_(directed) {
  if (directed) {
    sdfs2_ = std::make_unique<Sdfs2>(n, true);
    sdfs2_->set_duplicate_tracking(false);
    highest_.assign(n + 1, kNoVertex);
    sdfs2_->set_discard_hook([this](VertexId from, VertexId to) { remember_back(from, to); });
  } else {
    adfs_ = std::make_unique<Adfs>(n, Adfs::Variant::Adfs1);
    stick_.assign(n + 1, 0);
  }
}

const DfsTree& StreamState::tree() const { return directed_ ? sdfs2_->tree() : adfs_->tree(); }
const Graph& StreamState::retained_graph() const { return directed_ ? sdfs2_->graph() : adfs_->graph(); }
const Counters& StreamState::counters() const { return directed_ ? sdfs2_->counters() : adfs_->counters(); }

bool StreamState::on_stick(VertexId v) const { return directed_ ? sdfs2_->on_stick(v) : stick_[v] != 0; }

std::size_t StreamState::retained_edges() const {
  const Graph& g = retained_graph();
  return g.m() - (n_ - tree().children[kPseudoRoot].size());
}

std::optional<VertexId> StreamState::highest_back(VertexId v) const {
  if (!directed_ || highest_[v] == kNoVertex) return std::nullopt;
  return highest_[v];
}

void StreamState::remember_back(VertexId from, VertexId to) {
  ++dropped_;
  const DfsTree& t = sdfs2_->tree();
  if (!t.is_ancestor(to, from)) return;  // forward edge: the tree path implies it
  VertexId& h = highest_[from];
  if (h == kNoVertex || t.depth[to] < t.depth[h]) h = to;
}

void StreamState::extend_stick() {
  const DfsTree& t = adfs_->tree();
  while (t.children[bristle_root_].size() == 1) {
    const VertexId next = t.children[bristle_root_].front();
    if (bristle_root_ != kPseudoRoot) {
      stick_[bristle_root_] = 1;
      dropped_ += adfs_->discard_non_tree_edges(bristle_root_);
    }
    bristle_root_ = next;
  }
}

void StreamState::stream_edge(VertexId u, VertexId v) {
  if (u == kPseudoRoot || v == kPseudoRoot || u > n_ || v > n_) {
    throw std::invalid_argument("stream edge has an endpoint that is not a real vertex");
  }
  ++streamed_;
  const Graph& g = retained_graph();
  if (u == v || g.has_edge(u, v)) {
    ++duplicates_;
    return;
  }
  if (directed_) {
    sdfs2_->insert(u, v);  // drops stick edges through the hook
  } else if (stick_[u] || stick_[v]) {
    ++dropped_;
  } else {
    adfs_->insert(u, v);
    extend_stick();
  }
  peak_ = std::max(peak_, retained_edges());
}

std::vector<std::vector<VertexId>> StreamState::scc_query() const {
  if (!directed_) throw std::logic_error("strong connectivity needs a directed stream");
  const Graph& g = sdfs2_->graph();
  auto neighbors = [&](VertexId v, std::size_t i) -> VertexId {
    const auto out = g.out(v);
    if (i < out.size()) return out[i];
    if (i == out.size() && highest_[v] != kNoVertex) return highest_[v];
    return kNoVertex;
  };

  // Iterative Tarjan.
  std::vector<std::uint32_t> index(n_ + 1, 0), low(n_ + 1, 0);
  std::vector<std::uint8_t> on_stack(n_ + 1, 0);
  std::vector<VertexId> stack;
  std::vector<std::pair<VertexId, std::size_t>> frames;
  std::vector<std::vector<VertexId>> comps;
  std::uint32_t counter = 0;
  for (VertexId root = 1; root <= n_; ++root) {
    if (index[root] != 0) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = ++counter;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, i] = frames.back();
      const VertexId w = neighbors(v, i);
      if (w != kNoVertex) {
        ++i;
        if (index[w] == 0) {
          index[w] = low[w] = ++counter;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const VertexId done = v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[done]);
      if (low[done] == index[done]) {
        std::vector<VertexId> comp;
        VertexId x;
        do {
          x = stack.back();
          stack.pop_back();
          on_stack[x] = 0;
          comp.push_back(x);
        } while (x != done);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
    }
  }
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return comps;
}

}  // namespace incdfs
