#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "incdfs/algorithm.hpp"
#include "incdfs/generators.hpp"

namespace incdfs {

/// Probability that a uniformly random absent pair is a cross edge of `tree`
/// (anti-cross for directed graphs). Exact: every real vertex v has
/// depth(v) - 1 real proper ancestors, every other pair is unrelated, and no
/// existing edge joins an unrelated pair of a valid tree. `m_real` is the
/// number of edges inserted so far. Throws when no pair is absent.
double compute_pc(const DfsTree& tree, std::uint64_t m_real, bool directed);
double compute_pc(const Graph& graph, const DfsTree& tree);

/// Lower bound on the stick length of a DFS tree of G(n, m): n - n0 where n0
/// is the smallest integer in [2, n] with 2 n0 m >= n^2 (ln n0 + c); 0 when
/// only n0 = n (or nothing) qualifies. Natural logarithms.
std::size_t predict_stick(std::size_t n, std::uint64_t m, double c = 1.0);

struct PowerFit {
  double slope = 0;
  double intercept = 0;
  double residual = 0;  ///< root mean square of the log-space residuals
};

/// Least-squares line through (ln x, ln y). Needs >= 3 positive points.
PowerFit fit_exponent(const std::vector<std::pair<double, double>>& points);

struct ExperimentConfig {
  /// An algorithm name (see parse_algorithm) or "stream".
  std::string algorithm = "adfs1";
  GraphMode mode = GraphMode::Undirected;
  /// gnm, gnp, worstcase-adfs1, worstcase-fdfs, worstcase-sdfs3 or dataset.
  std::string source = "gnm";
  std::string dataset;
  std::size_t n = 100;
  /// Edge count; 0 means every possible edge.
  std::uint64_t m = 0;
  double p = 0.5;  ///< gnp only
  std::uint64_t seed = 1;
  std::size_t trials = 1;
  bool batch = false;
  std::size_t sample_every = 1;
  bool adversarial = false;  ///< ADFS1 drain order
  bool with_pc = true;
};

struct MetricRow {
  std::uint64_t m = 0;
  std::uint64_t delta = 0;
  std::uint64_t cumulative = 0;
  std::uint64_t ls = 0;
  std::uint64_t bristle = 0;
  double pc = 0;
  std::uint64_t rebuilds = 0;

  friend bool operator==(const MetricRow&, const MetricRow&) = default;
};

struct ExperimentResult {
  std::vector<std::uint64_t> seeds;
  std::vector<std::vector<MetricRow>> trials;
  /// Sample-wise mean over trials (rounded); empty for a single trial.
  std::vector<MetricRow> mean;
  std::vector<std::string> warnings;
};

/// Builds the configured sequence for one trial.
UpdateSequence make_sequence(const ExperimentConfig& config, std::uint64_t seed);

/// Replays one sequence and samples a row every `sample_every` insertions
/// (or batches) and after the last one.
std::vector<MetricRow> replay(const ExperimentConfig& config, const UpdateSequence& seq,
                              std::vector<std::string>* warnings = nullptr);

ExperimentResult run_experiment(const ExperimentConfig& config);

inline constexpr const char* kCsvHeader = "m,delta,cumulative,ls,bristle,pc,rebuilds";

/// One header, then rows. Multi-trial results separate blocks with comment
/// lines "# trial <i> seed <s>" and "# mean".
void write_csv(std::ostream& out, const ExperimentResult& result);
void write_rows(std::ostream& out, const std::vector<MetricRow>& rows);
/// Parses rows back, skipping the header and comment lines.
std::vector<MetricRow> parse_csv(std::istream& in);

}  // namespace incdfs
