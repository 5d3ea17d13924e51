#include <doctest.h>

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "incdfs/analysis.hpp"
#include "incdfs/sdfs2.hpp"
#include "incdfs/streaming.hpp"

using namespace incdfs;

namespace {

Graph chain(std::size_t n) {
  Graph g(n, false);
  for (VertexId v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

// A tree from an explicit parent array (children in index order).
DfsTree tree_of(const std::vector<VertexId>& parent) {
  DfsTree t(parent.size() - 1);
  for (VertexId v = 1; v < parent.size(); ++v) {
    t.detach(v);
    t.attach(v, parent[v]);
  }
  t.renumber();
  return t;
}

}  // namespace

TEST_CASE("static dfs on small fixed graphs") {
  const DfsTree c = static_dfs(chain(3));
  CHECK(c.parent == std::vector<VertexId>{kNoVertex, 0, 1, 2});
  CHECK(c.depth == std::vector<std::uint32_t>{0, 1, 2, 3});

  const DfsTree star = static_dfs(Graph(3, false));
  CHECK(star.children[0] == std::vector<VertexId>{1, 2, 3});
  CHECK(star.dfn == std::vector<std::uint32_t>{4, 1, 2, 3});

  Graph tri(3, false);
  tri.add_edge(1, 2);
  tri.add_edge(2, 3);
  tri.add_edge(1, 3);
  const DfsTree t = static_dfs(tri);
  CHECK(t.parent[2] == 1);
  CHECK(t.parent[3] == 2);
}

TEST_CASE("edge classes on a chain and on siblings") {
  const DfsTree c = static_dfs(chain(3));
  CHECK(classify_edge(c, 3, 1, false) == EdgeClass::Back);
  const DfsTree sib(2);
  CHECK(classify_edge(sib, 1, 2, false) == EdgeClass::Cross);
  CHECK(classify_edge(sib, 1, 2, true) == EdgeClass::AntiCross);
  CHECK(classify_edge(sib, 2, 1, true) == EdgeClass::Cross);
  CHECK(is_valid_dfs_tree(chain(3), c));
}

TEST_CASE("static dfs trees of random graphs are valid") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto seq = gen_gnm(50, 30 + seed % 300, seed);
    Graph g(50, false);
    for (const Edge& e : seq.edges) g.add_edge(e.u, e.v);
    REQUIRE(is_valid_dfs_tree(g, static_dfs(g)));
  }
}

TEST_CASE("lca on fixed trees") {
  CHECK(lca(static_dfs(chain(3)), 2, 3) == 2);
  CHECK(lca(DfsTree(2), 1, 2) == kPseudoRoot);
  // Balanced binary tree 1 -> {2, 3}, 2 -> {4, 5}, 3 -> {6, 7}.
  const DfsTree b = tree_of({kNoVertex, 0, 1, 1, 2, 2, 3, 3});
  CHECK(lca(b, 4, 5) == 2);
  CHECK(lca(b, 4, 6) == 1);
  CHECK(lca(b, 5, 2) == 2);
}

TEST_CASE("stick examples") {
  CHECK(stick_profile(DfsTree(2)).length == 0);
  CHECK(stick_profile(DfsTree(2)).bristle_root == kPseudoRoot);
  CHECK(stick_profile(static_dfs(chain(4))).length == 3);
  const auto sp = stick_profile(tree_of({kNoVertex, 0, 1, 2, 2}));
  CHECK(sp.length == 1);
  CHECK(sp.bristle_root == 2);
  CHECK(sp.bristle_size == 3);
}

TEST_CASE("sdfs2 recovers the stick of any adopted tree") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::size_t n = 30;
    const auto seq = gen_gnm(n, 20 + seed % 400, seed);
    Graph g(n, false);
    for (const Edge& e : seq.edges) g.add_edge(e.u, e.v);
    const DfsTree t = static_dfs(g);
    const auto sp = stick_profile(t);
    const Sdfs2 a(g, t);
    REQUIRE(a.stick_length() == sp.length);
    REQUIRE(a.bristle_root() == sp.bristle_root);
  }
}

TEST_CASE("small generator contracts") {
  const auto all = gen_gnm(4, 6, 99);
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (const Edge& e : all.edges) pairs.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
  CHECK(pairs.size() == 6);
  CHECK(gen_gnm(30, 200, 1).edges != gen_gnm(30, 200, 2).edges);
  CHECK(gen_gnp(5, 1.0, 3).m() == 10);

  double sum = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) sum += double(gen_gnp(100, 0.5, seed).m());
  const double sd_of_mean = std::sqrt(4950 * 0.25 / 200);
  CHECK(std::abs(sum / 200 - 2475) < 3 * sd_of_mean);
}

TEST_CASE("worst-case generators follow their schedules") {
  const auto a = gen_worstcase_adfs1(128, 512);
  std::map<std::uint32_t, int> triggers;
  for (const EdgeTag& t : a.tags)
    if (t.trigger) ++triggers[t.stage];
  REQUIRE(!triggers.empty());
  for (auto [stage, count] : triggers) {
    CHECK(stage >= 1);
    CHECK(count == 2);
  }

  const std::size_t n = 32;
  const auto f = gen_worstcase_fdfs(n, n * n / 8);
  const VertexId b1 = f.edges.back().v;
  std::set<VertexId> sources;
  for (std::size_t i = f.m() - n / 2; i < f.m(); ++i) {
    CHECK(f.edges[i].v == b1);
    CHECK(f.tags[i].trigger);
    sources.insert(f.edges[i].u);
  }
  CHECK(sources.size() == n / 2);

  for (std::uint64_t m : {128u, 288u, 512u}) {
    const auto s = sdfs3_worstcase_shape(m);
    CHECK(s.e_y - s.e_z == s.k + 1);
  }
}

TEST_CASE("dataset batches and repeats") {
  std::istringstream three("1 2 5\n2 3 5\n3 4 9\n");
  CHECK(parse_dataset(three).batch_id == std::vector<std::uint32_t>{0, 0, 1});
  std::istringstream dup("2 7 1\n7 8 2\n2 7 3\n");
  CHECK(parse_dataset(dup).m() == 2);
}

TEST_CASE("stream keeps bristle back edges and drops stick edges") {
  StreamState st(6, false);
  for (VertexId v = 1; v < 4; ++v) st.stream_edge(v, v + 1);  // chain 1-2-3-4
  st.stream_edge(4, 5);
  st.stream_edge(4, 6);  // 4 branches: stick is 1, 2, 3
  REQUIRE(st.on_stick(2));
  const std::size_t before = st.retained_graph().m();
  st.stream_edge(1, 3);
  CHECK(st.retained_graph().m() == before);
  CHECK(st.dropped() >= 1);

  StreamState br(5, false);
  br.stream_edge(1, 2);
  br.stream_edge(1, 3);
  br.stream_edge(3, 4);
  br.stream_edge(4, 1);  // back edge inside the bristles
  CHECK(br.retained_edges() == 1);

  StreamState empty(4, true);
  CHECK(empty.scc_query() == std::vector<std::vector<VertexId>>{{1}, {2}, {3}, {4}});
}

TEST_CASE("p_c on fixed trees and against brute force at n = 200") {
  const Graph c = chain(4);
  CHECK(compute_pc(c, static_dfs(c)) == 0.0);
  CHECK(compute_pc(Graph(5, false), DfsTree(5)) == 1.0);

  const auto seq = gen_gnm(200, 2000, 17);
  Graph g(200, false);
  for (const Edge& e : seq.edges) g.add_edge(e.u, e.v);
  const DfsTree t = static_dfs(g);
  std::uint64_t absent = 0, cross = 0;
  for (VertexId u = 1; u <= 200; ++u) {
    for (VertexId v = u + 1; v <= 200; ++v) {
      if (g.has_edge(u, v)) continue;
      ++absent;
      cross += classify_edge(t, u, v, false) == EdgeClass::Cross ? 1 : 0;
    }
  }
  CHECK(compute_pc(g, t) == doctest::Approx(double(cross) / double(absent)).epsilon(1e-12));
}

TEST_CASE("predict_stick thresholds and monotonicity") {
  for (std::size_t n : {50u, 500u, 2000u}) {
    const double ln = std::log(double(n));
    CHECK(predict_stick(n, std::uint64_t(n / 2.0 * (ln + 1)), 1.0) == 0);
    // Two doublings past the threshold leave bristles of at most n/2.
    CHECK(n - predict_stick(n, std::uint64_t(2 * n * ln), 1.0) <= n / 2);
    std::size_t prev = 0;
    for (std::uint64_t m = n; m <= std::uint64_t(n) * (n - 1) / 2; m += n / 2) {
      const std::size_t p = predict_stick(n, m, 1.0);
      CHECK(p >= prev);
      prev = p;
    }
  }
  CHECK_THROWS_AS(predict_stick(1, 5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(predict_stick(10, 5, 0.5), std::invalid_argument);
}

TEST_CASE("fit_exponent on textbook power laws") {
  std::vector<std::pair<double, double>> sq, cube;
  for (double x : {1.0, 2.0, 3.0, 5.0}) {
    sq.emplace_back(x, x * x);
    cube.emplace_back(x, 7 * x * x * x);
  }
  CHECK(fit_exponent(sq).slope == doctest::Approx(2.0));
  CHECK(fit_exponent(cube).slope == doctest::Approx(3.0));
  CHECK(fit_exponent(cube).residual == doctest::Approx(0.0));
}

TEST_CASE("sdfs cumulative cost strictly increases and ADFS variants agree") {
  ExperimentConfig cfg;
  cfg.algorithm = "sdfs";
  cfg.n = 10;
  const auto rows = run_experiment(cfg).trials[0];
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].cumulative > rows[i - 1].cumulative);

  cfg.n = 1000;
  cfg.with_pc = false;
  cfg.sample_every = 1u << 30;
  cfg.algorithm = "adfs1";
  const double a1 = double(run_experiment(cfg).trials[0].back().cumulative);
  cfg.algorithm = "adfs2";
  const double a2 = double(run_experiment(cfg).trials[0].back().cumulative);
  CHECK(std::abs(a1 - a2) / std::min(a1, a2) <= 0.10);
}
