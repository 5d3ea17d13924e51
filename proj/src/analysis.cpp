#include "incdfs/analysis.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "incdfs/adfs.hpp"
#include "incdfs/streaming.hpp"

namespace incdfs {

double compute_pc(const DfsTree& tree, std::uint64_t m_real, bool directed) {
  const std::uint64_t n = tree.n();
  const std::uint64_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  std::uint64_t related = 0;
  for (VertexId v = 1; v <= n; ++v) related += tree.depth[v] - 1;
  const std::uint64_t absent = (directed ? 2 * pairs : pairs) - m_real;
  if (absent == 0) throw std::invalid_argument("graph is complete: no absent pair left");
  return static_cast<double>(pairs - related) / static_cast<double>(absent);
}

double compute_pc(const Graph& graph, const DfsTree& tree) {
  return compute_pc(tree, graph.m(), graph.directed());
}

std::size_t predict_stick(std::size_t n, std::uint64_t m, double c) {
  if (n < 2 || m < 1 || c < 1) throw std::invalid_argument("predict_stick needs n >= 2, m >= 1, c >= 1");
  const double nn = static_cast<double>(n) * static_cast<double>(n);
  const double mm = static_cast<double>(m);
  auto holds = [&](std::size_t n0) { return 2.0 * double(n0) * mm >= nn * (std::log(double(n0)) + c); };
  if (!holds(n)) return 0;
  // With c >= 1 the qualifying n0 form a suffix of [2, n]; the fixed point
  // lands near its start and a short walk finishes the job.
  std::size_t n0 = n;
  for (int it = 0; it < 64; ++it) {
    const double target = std::ceil(nn * (std::log(double(n0)) + c) / (2.0 * mm));
    const std::size_t next = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(2.0, target)), 2, n0);
    if (next == n0) break;
    n0 = next;
  }
  while (!holds(n0)) ++n0;
  while (n0 > 2 && holds(n0 - 1)) --n0;
  return n - n0;
}

PowerFit fit_exponent(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) throw std::invalid_argument("fit_exponent needs at least 3 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : points) {
    if (!(x > 0 && y > 0)) throw std::invalid_argument("fit_exponent needs positive data");
    const double lx = std::log(x), ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double k = static_cast<double>(points.size());
  const double denom = k * sxx - sx * sx;
  if (denom == 0) throw std::invalid_argument("fit_exponent needs distinct x values");
  PowerFit fit;
  fit.slope = (k * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / k;
  double ss = 0;
  for (const auto& [x, y] : points) {
    const double r = std::log(y) - (fit.intercept + fit.slope * std::log(x));
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / k);
  return fit;
}

UpdateSequence make_sequence(const ExperimentConfig& cfg, std::uint64_t seed) {
  const std::string& s = cfg.source;
  if (s == "gnm") return gen_gnm(cfg.n, cfg.m == 0 ? max_edges(cfg.n, cfg.mode) : cfg.m, seed, cfg.mode);
  if (s == "gnp") return gen_gnp(cfg.n, cfg.p, seed, cfg.mode);
  if (s == "worstcase-adfs1") return gen_worstcase_adfs1(cfg.n, cfg.m == 0 ? 4 * cfg.n : cfg.m);
  if (s == "worstcase-fdfs") return gen_worstcase_fdfs(cfg.n, cfg.m == 0 ? cfg.n * cfg.n / 8 : cfg.m);
  if (s == "worstcase-sdfs3") return gen_worstcase_sdfs3(cfg.n, cfg.m == 0 ? 128 : cfg.m);
  if (s == "dataset") {
    if (cfg.dataset.empty()) throw std::invalid_argument("dataset source needs a path");
    return load_dataset(cfg.dataset, is_directed(cfg.mode));
  }
  throw std::invalid_argument("unknown sequence source '" + s + "'");
}

namespace {

// Uniform view over the algorithms and the streaming wrapper.
struct Runner {
  std::unique_ptr<IncrementalDfs> algo;
  std::unique_ptr<StreamState> stream;

  void insert(std::span<const Edge> edges, bool batch) {
    if (stream) {
      for (const Edge& e : edges) stream->stream_edge(e.u, e.v);
    } else if (batch) {
      algo->insert_batch(edges);
    } else {
      for (const Edge& e : edges) algo->insert(e.u, e.v);
    }
  }
  const DfsTree& tree() const { return stream ? stream->tree() : algo->tree(); }
  const Counters& counters() const { return stream ? stream->counters() : algo->counters(); }
};

}  // namespace

std::vector<MetricRow> replay(const ExperimentConfig& cfg, const UpdateSequence& seq,
                              std::vector<std::string>* warnings) {
  const GraphMode mode = seq.mode();
  Runner run;
  bool batch = cfg.batch;
  if (cfg.algorithm == "stream") {
    if (mode == GraphMode::Dag) throw std::invalid_argument("streaming supports undirected and directed graphs");
    run.stream = std::make_unique<StreamState>(seq.n, seq.directed);
    batch = false;
  } else {
    const auto a = parse_algorithm(cfg.algorithm);
    if (!a) throw std::invalid_argument("unknown algorithm '" + cfg.algorithm + "'");
    run.algo = make_algorithm(*a, seq.n, mode);
    if (cfg.adversarial) {
      auto* adfs = dynamic_cast<Adfs*>(run.algo.get());
      if (adfs == nullptr || adfs->variant() != Adfs::Variant::Adfs1) {
        throw std::invalid_argument("adversarial order applies to adfs1 only");
      }
      adfs->set_adversarial_order(true);
    }
    if (batch && !supports_batches(*a)) {
      if (warnings) warnings->push_back(std::string(to_string(*a)) + " cannot exploit batches; inserting edge by edge");
      batch = false;
    }
  }

  std::vector<std::span<const Edge>> steps;
  if (batch) {
    steps = seq.batches();
  } else {
    for (const Edge& e : seq.edges) steps.emplace_back(&e, 1);
  }
  const std::size_t stride = std::max<std::size_t>(1, cfg.sample_every);
  std::vector<MetricRow> rows;
  std::uint64_t inserted = 0, last = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    run.insert(steps[i], batch);
    inserted += steps[i].size();
    if ((i + 1) % stride != 0 && i + 1 != steps.size()) continue;
    const Counters& c = run.counters();
    const StickProfile sp = stick_profile(run.tree());
    MetricRow row;
    row.m = inserted;
    row.cumulative = c.edges_processed;
    row.delta = c.edges_processed - last;
    last = c.edges_processed;
    row.ls = sp.length;
    row.bristle = sp.bristle_size;
    row.rebuilds = c.rebuilds;
    if (cfg.with_pc && inserted < max_edges(seq.n, mode == GraphMode::Directed ? mode : GraphMode::Undirected)) {
      row.pc = compute_pc(run.tree(), inserted, seq.directed);
    }
    rows.push_back(row);
  }
  return rows;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  if (cfg.trials == 0) throw std::invalid_argument("trials must be positive");
  ExperimentResult result;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const std::uint64_t seed = cfg.seed + t;
    result.seeds.push_back(seed);
    const UpdateSequence seq = make_sequence(cfg, seed);
    result.trials.push_back(replay(cfg, seq, t == 0 ? &result.warnings : nullptr));
  }
  if (cfg.trials > 1) {
    std::size_t rows = result.trials.front().size();
    for (const auto& tr : result.trials) rows = std::min(rows, tr.size());
    const double k = static_cast<double>(cfg.trials);
    auto avg = [&](auto field) {
      return [&, field](std::size_t i) {
        double s = 0;
        for (const auto& tr : result.trials) s += static_cast<double>(tr[i].*field);
        return s / k;
      };
    };
    for (std::size_t i = 0; i < rows; ++i) {
      MetricRow r;
      r.m = static_cast<std::uint64_t>(std::llround(avg(&MetricRow::m)(i)));
      r.delta = static_cast<std::uint64_t>(std::llround(avg(&MetricRow::delta)(i)));
      r.cumulative = static_cast<std::uint64_t>(std::llround(avg(&MetricRow::cumulative)(i)));
      r.ls = static_cast<std::uint64_t>(std::llround(avg(&MetricRow::ls)(i)));
      r.bristle = static_cast<std::uint64_t>(std::llround(avg(&MetricRow::bristle)(i)));
      r.pc = avg(&MetricRow::pc)(i);
      r.rebuilds = static_cast<std::uint64_t>(std::llround(avg(&MetricRow::rebuilds)(i)));
      result.mean.push_back(r);
    }
  }
  return result;
}

void write_rows(std::ostream& out, const std::vector<MetricRow>& rows) {
  std::ostringstream pc;
  for (const MetricRow& r : rows) {
    pc.str("");
    pc.precision(6);
    pc << r.pc;
    out << r.m << ',' << r.delta << ',' << r.cumulative << ',' << r.ls << ',' << r.bristle << ',' << pc.str()
        << ',' << r.rebuilds << '\n';
  }
}

void write_csv(std::ostream& out, const ExperimentResult& result) {
  out << kCsvHeader << '\n';
  const bool multi = result.trials.size() > 1;
  for (std::size_t t = 0; t < result.trials.size(); ++t) {
    if (multi) out << "# trial " << t << " seed " << result.seeds[t] << '\n';
    write_rows(out, result.trials[t]);
  }
  if (multi) {
    out << "# mean\n";
    write_rows(out, result.mean);
  }
}

std::vector<MetricRow> parse_csv(std::istream& in) {
  std::vector<MetricRow> rows;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (line.empty() || line[0] == '#' || line == kCsvHeader) continue;
    std::istringstream f(line);
    MetricRow r;
    char c[6];
    if (!(f >> r.m >> c[0] >> r.delta >> c[1] >> r.cumulative >> c[2] >> r.ls >> c[3] >> r.bristle >> c[4] >>
          r.pc >> c[5] >> r.rebuilds)) {
      throw std::runtime_error("csv: malformed row on line " + std::to_string(lineno));
    }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace incdfs
