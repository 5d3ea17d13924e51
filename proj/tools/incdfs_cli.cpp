// The incdfs command-line tool; one subcommand per kind of run.
#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>

#include "incdfs/adfs.hpp"
#include "incdfs/analysis.hpp"
#include "incdfs/generators.hpp"
#include "incdfs/streaming.hpp"

using namespace incdfs;

namespace {

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw std::runtime_error("cannot write '" + path + "'");
  }
  std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

GraphMode mode_of(const std::string& name) {
  const auto m = parse_mode(name);
  if (!m) throw CLI::ValidationError("--mode", "expected undirected, directed or dag");
  return *m;
}

const auto kModes = CLI::IsMember({"undirected", "directed", "dag"});

// Iterative Kosaraju over the full edge list; the reference for `stream`.
std::vector<std::vector<VertexId>> offline_scc(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::vector<VertexId>> fwd(n + 1), rev(n + 1);
  for (const Edge& e : edges) {
    fwd[e.u].push_back(e.v);
    rev[e.v].push_back(e.u);
  }
  std::vector<char> seen(n + 1, 0);
  std::vector<VertexId> finish;
  for (VertexId r = 1; r <= n; ++r) {
    if (seen[r]) continue;
    std::vector<std::pair<VertexId, std::size_t>> stack{{r, 0}};
    seen[r] = 1;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < fwd[v].size()) {
        const VertexId w = fwd[v][i++];
        if (!seen[w]) {
          seen[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        finish.push_back(v);
        stack.pop_back();
      }
    }
  }
  std::vector<char> done(n + 1, 0);
  std::vector<std::vector<VertexId>> out;
  for (auto it = finish.rbegin(); it != finish.rend(); ++it) {
    if (done[*it]) continue;
    std::vector<VertexId> comp, stack{*it};
    done[*it] = 1;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId w : rev[v]) {
        if (!done[w]) {
          done[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Common {
  std::string algo = "adfs1";
  std::string mode = "undirected";
  std::size_t n = 100;
  std::uint64_t m = 0;
  std::uint64_t seed = 1;
  std::string dataset;
  std::string out;
};

void add_common(CLI::App* app, Common& c, bool with_algo = true) {
  if (with_algo) app->add_option("--algo", c.algo, "sdfs, sdfs-int, fdfs, adfs1, adfs2, sdfs2, sdfs3")->capture_default_str();
  app->add_option("--mode", c.mode, "Graph kind")->check(kModes)->capture_default_str();
  app->add_option("--n", c.n, "Vertex count")->capture_default_str();
  app->add_option("--m", c.m, "Edge count (0 = every pair)")->capture_default_str();
  app->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  app->add_option("--dataset", c.dataset, "Timestamped edge list to replay instead of a random graph");
  app->add_option("--out", c.out, "CSV output path (default stdout)");
}

UpdateSequence sequence_for(const Common& c) {
  const GraphMode mode = mode_of(c.mode);
  if (!c.dataset.empty()) return load_dataset(c.dataset, is_directed(mode));
  return gen_gnm(c.n, c.m == 0 ? max_edges(c.n, mode) : c.m, c.seed, mode);
}

int run_bench(const Common& c, std::size_t trials, bool batch, std::size_t every, const std::string& source,
              double p, bool adversarial) {
  ExperimentConfig cfg;
  cfg.algorithm = c.algo;
  cfg.mode = mode_of(c.mode);
  cfg.source = c.dataset.empty() ? source : "dataset";
  cfg.dataset = c.dataset;
  cfg.n = c.n;
  cfg.m = c.m;
  cfg.p = p;
  cfg.seed = c.seed;
  cfg.trials = trials;
  cfg.batch = batch;
  cfg.sample_every = every;
  cfg.adversarial = adversarial;
  const ExperimentResult res = run_experiment(cfg);
  for (const auto& w : res.warnings) std::cerr << "warning: " << w << '\n';
  Output out(c.out);
  write_csv(out.get(), res);
  return 0;
}

int run_broomstick(const Common& c, std::size_t trials, double cst, std::vector<std::uint64_t> points) {
  if (mode_of(c.mode) != GraphMode::Undirected) throw CLI::ValidationError("--mode", "broomstick needs undirected graphs");
  const double nln = double(c.n) * std::log(double(c.n));
  const std::uint64_t cap = max_edges(c.n, GraphMode::Undirected);
  if (points.empty()) {
    for (int i = 0; std::ldexp(nln, i) < double(cap); ++i) points.push_back(std::uint64_t(std::ldexp(nln, i)));
    points.push_back(cap);
  }
  std::sort(points.begin(), points.end());
  if (points.back() > cap) throw CLI::ValidationError("--m", "density point exceeds the number of pairs");
  std::vector<double> ls(points.size()), br(points.size()), pc(points.size());
  const auto algo = parse_algorithm(c.algo);
  if (!algo || !supports(*algo, GraphMode::Undirected)) throw CLI::ValidationError("--algo", "needs an undirected algorithm");
  for (std::size_t t = 0; t < trials; ++t) {
    const auto seq = gen_gnm(c.n, points.back(), c.seed + t);
    auto a = make_algorithm(*algo, c.n, GraphMode::Undirected);
    std::size_t next = 0;
    for (std::size_t i = 0; i < seq.m() && next < points.size(); ++i) {
      a->insert(seq.edges[i].u, seq.edges[i].v);
      while (next < points.size() && points[next] == i + 1) {
        const StickProfile sp = stick_profile(a->tree());
        ls[next] += double(sp.length);
        br[next] += double(sp.bristle_size);
        if (i + 1 < cap) pc[next] += compute_pc(a->tree(), i + 1, false);
        ++next;
      }
    }
  }
  Output out(c.out);
  out.get() << "m,ls,bristle,pc,predicted\n";
  const double k = double(trials);
  for (std::size_t i = 0; i < points.size(); ++i) {
    out.get() << points[i] << ',' << ls[i] / k << ',' << br[i] / k << ',' << pc[i] / k << ','
              << predict_stick(c.n, points[i], cst) << '\n';
  }
  return 0;
}

int run_worstcase(const Common& c, const std::string& family, bool default_order, const std::string& dump) {
  UpdateSequence seq;
  std::string algo = c.algo;
  if (family == "adfs1") {
    seq = gen_worstcase_adfs1(c.n, c.m == 0 ? 4 * c.n : c.m);
  } else if (family == "fdfs") {
    seq = gen_worstcase_fdfs(c.n, c.m == 0 ? c.n * c.n / 8 : c.m);
    if (algo == "adfs1") algo = "fdfs";
  } else {
    const std::uint64_t m = c.m == 0 ? 128 : c.m;
    seq = gen_worstcase_sdfs3(sdfs3_worstcase_shape(m).vertices, m);
    if (algo == "adfs1") algo = "sdfs3";
  }
  if (!dump.empty()) {
    std::ofstream f(dump);
    if (!f) throw std::runtime_error("cannot write '" + dump + "'");
    write_sequence(f, seq);
  }
  ExperimentConfig cfg;
  cfg.algorithm = algo;
  cfg.adversarial = algo == "adfs1" && !default_order;
  cfg.sample_every = std::max<std::size_t>(1, seq.m() / 100);
  const auto rows = replay(cfg, seq);
  const double total = double(rows.back().cumulative), m = double(seq.m()), n = double(seq.n);
  std::cerr << "family " << family << ", n " << seq.n << ", m " << seq.m() << ", " << algo
            << (cfg.adversarial ? " (adversarial order)" : "") << ": total " << rows.back().cumulative
            << ", total/(n^1.5 m^0.5) " << total / (std::pow(n, 1.5) * std::sqrt(m)) << ", total/(mn) "
            << total / (m * n) << ", total/m^2 " << total / (m * m) << '\n';
  Output out(c.out);
  out.get() << kCsvHeader << '\n';
  write_rows(out.get(), rows);
  return 0;
}

int run_stream(const Common& c) {
  const UpdateSequence seq = sequence_for(c);
  StreamState st(seq.n, seq.directed);
  for (const Edge& e : seq.edges) st.stream_edge(e.u, e.v);
  const double bound = 4.0 * double(seq.n) * std::log(double(seq.n));
  Output out(c.out);
  out.get() << "n,streamed,dropped,duplicates,retained,peak_retained,bound,stick\n"
            << seq.n << ',' << st.streamed() << ',' << st.dropped() << ',' << st.duplicates() << ','
            << st.retained_edges() << ',' << st.peak_retained() << ',' << bound << ','
            << stick_profile(st.tree()).length << '\n';
  if (!seq.directed) return 0;
  const auto scc = st.scc_query();
  const bool match = scc == offline_scc(seq.n, seq.edges);
  std::cerr << scc.size() << " strongly connected components; offline check "
            << (match ? "agrees" : "DISAGREES") << '\n';
  return match ? 0 : 1;
}

int run_validate(const Common& c, const std::string& sequence, std::size_t every) {
  UpdateSequence seq;
  if (!sequence.empty()) {
    std::ifstream f(sequence);
    if (!f) throw std::runtime_error("cannot read '" + sequence + "'");
    seq = read_sequence(f);
  } else {
    seq = sequence_for(c);
  }
  const auto a = parse_algorithm(c.algo);
  if (!a) throw CLI::ValidationError("--algo", "unknown algorithm '" + c.algo + "'");
  auto algo = make_algorithm(*a, seq.n, seq.mode());
  Graph all(seq.n, seq.directed);
  for (std::size_t i = 0; i < seq.m(); ++i) {
    const Edge e = seq.edges[i];
    algo->insert(e.u, e.v);
    all.add_edge(e.u, e.v);
    if ((i + 1) % every != 0 && i + 1 != seq.m()) continue;
    const auto rep = is_valid_dfs_tree(all, algo->tree());
    if (!rep) {
      std::cout << "INVALID after edge " << i + 1 << " (" << e.u << "," << e.v << "): " << rep.reason << '\n';
      return 1;
    }
  }
  std::cout << "valid: " << seq.m() << " insertions, " << algo->counters().edges_processed
            << " edges processed, " << algo->counters().rebuilds << " rebuilds\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Incremental DFS maintenance: benchmarks and checks"};
  app.require_subcommand(1);

  Common bench_c, broom_c, worst_c, stream_c, valid_c;
  std::size_t trials = 1, every = 1, broom_trials = 10, valid_every = 1;
  bool batch = false, adversarial = false, default_order = false;
  std::string source = "gnm", family = "adfs1", dump, sequence;
  double p = 0.5, cst = 1.0;
  std::vector<std::uint64_t> points;

  auto* bench = app.add_subcommand("bench", "Replay a sequence and write per-sample metrics as CSV");
  add_common(bench, bench_c);
  bench->add_option("--trials", trials, "Independent trials (seeds seed, seed+1, ...)")->capture_default_str();
  bench->add_flag("--batch", batch, "Insert timestamp batches at once where supported");
  bench->add_option("--sample-every", every, "Record stride")->check(CLI::PositiveNumber)->capture_default_str();
  bench->add_option("--source", source, "Sequence generator")
      ->check(CLI::IsMember({"gnm", "gnp", "worstcase-adfs1", "worstcase-fdfs", "worstcase-sdfs3"}))
      ->capture_default_str();
  bench->add_option("--p", p, "Edge probability for gnp")->capture_default_str();
  bench->add_flag("--adversarial", adversarial, "ADFS1 drains its pool deepest-first");

  auto* broom = app.add_subcommand("broomstick", "Stick length, bristles and p_c against the prediction");
  add_common(broom, broom_c);
  broom->add_option("--trials", broom_trials, "Trials per density")->capture_default_str();
  broom->add_option("--c", cst, "Connectivity constant of the prediction")->capture_default_str();
  broom->add_option("--at", points, "Densities to sample (default 2^i n ln n)");

  auto* worst = app.add_subcommand("worstcase", "Generate and replay an adversarial family");
  add_common(worst, worst_c);
  worst->add_option("--family", family, "adfs1, fdfs or sdfs3")
      ->check(CLI::IsMember({"adfs1", "fdfs", "sdfs3"}))
      ->capture_default_str();
  worst->add_flag("--default-order", default_order, "Keep ADFS1's LIFO pool order");
  worst->add_option("--dump", dump, "Also write the sequence to this file");

  auto* stream = app.add_subcommand("stream", "Semi-streaming run with space report and SCC check");
  add_common(stream, stream_c, false);

  auto* valid = app.add_subcommand("validate", "Replay with a validity check after every insertion");
  add_common(valid, valid_c);
  valid->add_option("--sequence", sequence, "Sequence dump to replay");
  valid->add_option("--sample-every", valid_every, "Check stride")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*bench) return run_bench(bench_c, trials, batch, every, source, p, adversarial);
    if (*broom) return run_broomstick(broom_c, broom_trials, cst, points);
    if (*worst) return run_worstcase(worst_c, family, default_order, dump);
    if (*stream) return run_stream(stream_c);
    if (*valid) return run_validate(valid_c, sequence, valid_every);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
