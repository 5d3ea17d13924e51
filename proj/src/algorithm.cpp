#include "incdfs/algorithm.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

#include "incdfs/adfs.hpp"
#include "incdfs/fdfs.hpp"
#include "incdfs/sdfs.hpp"
#include "incdfs/sdfs2.hpp"
#include "incdfs/sdfs3.hpp"

namespace incdfs {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Sdfs: return "sdfs";
    case Algorithm::SdfsInt: return "sdfs-int";
    case Algorithm::Fdfs: return "fdfs";
    case Algorithm::Adfs1: return "adfs1";
    case Algorithm::Adfs2: return "adfs2";
    case Algorithm::Sdfs2: return "sdfs2";
    case Algorithm::Sdfs3: return "sdfs3";
  }
  return "?";
}

std::string_view to_string(GraphMode m) {
  switch (m) {
    case GraphMode::Undirected: return "undirected";
    case GraphMode::Directed: return "directed";
    case GraphMode::Dag: return "dag";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::Sdfs, Algorithm::SdfsInt, Algorithm::Fdfs, Algorithm::Adfs1,
                      Algorithm::Adfs2, Algorithm::Sdfs2, Algorithm::Sdfs3}) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

std::optional<GraphMode> parse_mode(std::string_view name) {
  for (GraphMode m : {GraphMode::Undirected, GraphMode::Directed, GraphMode::Dag}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

bool supports(Algorithm a, GraphMode m) {
  switch (a) {
    case Algorithm::Adfs1:
    case Algorithm::Adfs2: return m == GraphMode::Undirected;
    case Algorithm::Fdfs: return m != GraphMode::Undirected;
    default: return true;
  }
}

bool supports_batches(Algorithm a) { return a != Algorithm::Fdfs && a != Algorithm::Sdfs3; }

void IncrementalDfs::insert_batch(std::span<const Edge> edges) {
  for (const Edge& e : edges) insert(e.u, e.v);
}

std::unique_ptr<IncrementalDfs> make_algorithm(Algorithm a, std::size_t n, GraphMode mode) {
  if (!supports(a, mode)) {
    throw std::invalid_argument(std::string(to_string(a)) + " does not support " +
                                std::string(to_string(mode)) + " graphs");
  }
  const bool directed = is_directed(mode);
  switch (a) {
    case Algorithm::Sdfs: return std::make_unique<Sdfs>(n, directed, false);
    case Algorithm::SdfsInt: return std::make_unique<Sdfs>(n, directed, true);
    case Algorithm::Fdfs:
      return std::make_unique<Fdfs>(n, mode == GraphMode::Dag ? Fdfs::Mode::Dag : Fdfs::Mode::Directed);
    case Algorithm::Adfs1: return std::make_unique<Adfs>(n, Adfs::Variant::Adfs1);
    case Algorithm::Adfs2: return std::make_unique<Adfs>(n, Adfs::Variant::Adfs2);
    case Algorithm::Sdfs2: return std::make_unique<Sdfs2>(n, directed);
    case Algorithm::Sdfs3: return std::make_unique<Sdfs3>(n, mode);
  }
  throw std::invalid_argument("unknown algorithm");
}

namespace detail {

void check_new_edge(const Graph& g, VertexId u, VertexId v) {
  if (u == kPseudoRoot || v == kPseudoRoot || u > g.n() || v > g.n()) {
    throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") has an endpoint that is not a real vertex");
  }
  if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
  if (g.has_edge(u, v)) {
    throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
}

void check_new_batch(const Graph& g, std::span<const Edge> edges) {
  std::unordered_set<std::uint64_t> seen;
  for (const Edge& e : edges) {
    check_new_edge(g, e.u, e.v);
    VertexId a = e.u, b = e.v;
    if (!g.directed() && a > b) std::swap(a, b);
    if (!seen.insert((static_cast<std::uint64_t>(a) << 32) | b).second) {
      throw std::invalid_argument("duplicate edge inside batch");
    }
  }
}

}  // namespace detail

}  // namespace incdfs
