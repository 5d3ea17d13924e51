#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "incdfs/algorithm.hpp"
#include "incdfs/graph.hpp"

namespace incdfs {

enum class Provenance {
  RandomGnm,
  RandomGnp,
  RandomDag,
  WorstcaseAdfs1,
  WorstcaseFdfs,
  WorstcaseSdfs3,
  Dataset,
};

std::string_view to_string(Provenance p);

/// Where an edge sits in an adversarial schedule: stage 0 is set-up, and
/// `trigger` marks the edges that drive a stage (as opposed to set-up or
/// chain-extension edges).
struct EdgeTag {
  std::uint32_t stage = 0;
  bool trigger = false;
};

/// An ordered list of edge insertions over real vertices 1..n.
struct UpdateSequence {
  std::size_t n = 0;
  bool directed = false;
  bool dag = false;
  std::vector<Edge> edges;
  /// Empty, or one non-decreasing batch index per edge.
  std::vector<std::uint32_t> batch_id;
  /// Empty, or one tag per edge (adversarial generators only).
  std::vector<EdgeTag> tags;
  Provenance provenance = Provenance::RandomGnm;

  std::size_t m() const { return edges.size(); }
  GraphMode mode() const {
    return dag ? GraphMode::Dag : directed ? GraphMode::Directed : GraphMode::Undirected;
  }
  /// Consecutive runs of equal batch_id; one edge per batch when absent.
  std::vector<std::span<const Edge>> batches() const;
};

/// Largest simple edge count for the mode.
std::uint64_t max_edges(std::size_t n, GraphMode mode);

/// The first m edges of a uniformly random permutation of all possible
/// edges. DAG mode first draws a random vertex order and orients every pair
/// from the earlier to the later vertex.
UpdateSequence gen_gnm(std::size_t n, std::uint64_t m, std::uint64_t seed,
                       GraphMode mode = GraphMode::Undirected);

/// Every pair independently with probability p, emitted in random order.
UpdateSequence gen_gnp(std::size_t n, double p, std::uint64_t seed,
                       GraphMode mode = GraphMode::Undirected);

/// ADFS1 worst case: a chain A, B, X with all of A x X present. Each stage
/// adds a back edge from the top of A into B followed by a cross edge that
/// makes ADFS1 re-root the subtree holding A below the next block of B,
/// turning every A x X edge into a cross edge. Drained witness-first, each
/// stage costs Theta(|A||X|) edges.
UpdateSequence gen_worstcase_adfs1(std::size_t n, std::uint64_t m);

/// FDFS worst case on a DAG: chains A and B of n/2 vertices, edges inside B
/// (b_i, b_j), i < j, densest near b_1, then the edges (a_i, b_1) for
/// i = 1..n/2. The sequence has exactly m edges.
UpdateSequence gen_worstcase_fdfs(std::size_t n, std::uint64_t m);

/// Parameters of the SDFS3 worst case for a given m.
struct Sdfs3WorstcaseShape {
  std::size_t k = 0, p = 0, q = 0, r = 0;
  std::size_t e_x = 0, e_y = 0, e_z = 0;
  std::size_t vertices = 0;
};
Sdfs3WorstcaseShape sdfs3_worstcase_shape(std::uint64_t m);

/// SDFS3 worst case: three chains A+X, B+Y, C+Z with dense X, Y, Z; k phases
/// of k cross edges (b_i, c_j) that each force a rebuild of the dense Z
/// side, separated by the phase-transition edges (a_j, c_j), (a_{j+1}, c_j).
UpdateSequence gen_worstcase_sdfs3(std::size_t n, std::uint64_t m);

/// Reads a timestamped edge list: "u v", "u v t" or "u v w t" per line
/// (w < 0 marks a deletion, which is ignored). Lines starting with '#' or
/// '%' are comments. Edges are stably sorted by time, ids made dense in order
/// of first appearance, self-loops and repeats dropped, and equal timestamps
/// grouped into one batch.
UpdateSequence load_dataset(const std::string& path, bool directed = false);
UpdateSequence parse_dataset(std::istream& in, bool directed = false);

/// Text dump: header "n m directed dag", then "u v batch_id" per edge.
void write_sequence(std::ostream& out, const UpdateSequence& seq);
UpdateSequence read_sequence(std::istream& in);

/// Reads a dumped sequence one edge at a time without buffering it.
class SequenceReader {
 public:
  explicit SequenceReader(std::istream& in);

  std::size_t n() const { return n_; }
  std::uint64_t declared_m() const { return m_; }
  bool directed() const { return directed_; }
  bool dag() const { return dag_; }

  /// The next edge and its batch id, or nothing at end of input.
  std::optional<std::pair<Edge, std::uint32_t>> next();

 private:
  std::istream& in_;
  std::size_t n_ = 0;
  std::uint64_t m_ = 0;
  bool directed_ = false;
  bool dag_ = false;
  std::size_t line_ = 1;
};

}  // namespace incdfs
