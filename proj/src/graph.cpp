#include "incdfs/graph.hpp"

#include <algorithm>
#include <string>

namespace incdfs {

Graph::Graph(std::size_t n, bool directed)
    : n_(n), directed_(directed), out_(n + 1), in_(directed ? n + 1 : 0) {
  out_[kPseudoRoot].reserve(n);
  for (VertexId v = 1; v <= n; ++v) out_[kPseudoRoot].push_back(v);
}

Graph Graph::from_adjacency(std::size_t n, bool directed,
                            std::vector<std::vector<VertexId>> out,
                            std::vector<std::vector<VertexId>> in) {
  Graph g(n, directed);
  if (out.size() != n + 1 || (directed && in.size() != n + 1)) {
    throw std::invalid_argument("adjacency list count does not match vertex count");
  }
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v : out[u]) {
      g.check_real(v);
      if (u == v) throw std::invalid_argument("self-loop in adjacency");
      if (directed || u < v) {
        if (!g.keys_.insert(g.key(u, v)).second) {
          throw std::invalid_argument("duplicate edge in adjacency");
        }
        ++g.m_;
      }
    }
    g.out_[u] = std::move(out[u]);
    if (directed) g.in_[u] = std::move(in[u]);
  }
  // Symmetry / in-list consistency.
  std::size_t entries = 0;
  for (VertexId u = 1; u <= n; ++u) {
    entries += directed ? g.in_[u].size() : g.out_[u].size();
    if (directed) {
      for (VertexId w : g.in_[u]) {
        if (!g.has_edge(w, u)) throw std::invalid_argument("in-list without out-edge");
      }
    } else {
      for (VertexId w : g.out_[u]) {
        if (!g.has_edge(w, u)) throw std::invalid_argument("asymmetric undirected adjacency");
      }
    }
  }
  if (entries != (directed ? g.m_ : 2 * g.m_)) {
    throw std::invalid_argument("adjacency entry count mismatch");
  }
  return g;
}

std::uint64_t Graph::key(VertexId u, VertexId v) const {
  if (!directed_ && u > v) std::swap(u, v);
  return static_cast<std::uint64_t>(u) * (n_ + 1) + v;
}

void Graph::check_real(VertexId v) const {
  if (v == kPseudoRoot || v > n_) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " is not a real vertex of a graph with n=" +
                                std::to_string(n_));
  }
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u > n_ || v > n_ || u == v) return false;
  if (u == kPseudoRoot) return true;
  if (v == kPseudoRoot) return !directed_;
  return keys_.contains(key(u, v));
}

void Graph::add_edge(VertexId u, VertexId v) {
  check_real(u);
  check_real(v);
  if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
  if (!keys_.insert(key(u, v)).second) {
    throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  out_[u].push_back(v);
  if (directed_) {
    in_[v].push_back(u);
  } else {
    out_[v].push_back(u);
  }
  ++m_;
}

namespace {
void erase_one(std::vector<VertexId>& list, VertexId v) {
  auto it = std::find(list.begin(), list.end(), v);
  if (it != list.end()) list.erase(it);
}
}  // namespace

bool Graph::remove_edge(VertexId u, VertexId v) {
  if (u == kPseudoRoot || v == kPseudoRoot || !has_edge(u, v)) return false;
  keys_.erase(key(u, v));
  erase_one(out_[u], v);
  if (directed_) {
    erase_one(in_[v], u);
  } else {
    erase_one(out_[v], u);
  }
  --m_;
  return true;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> result;
  result.reserve(m_);
  for (VertexId u = 1; u <= n_; ++u) {
    for (VertexId v : out_[u]) {
      if (directed_ || u < v) result.push_back({u, v});
    }
  }
  return result;
}

}  // namespace incdfs
