#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "incdfs/analysis.hpp"
#include "incdfs/generators.hpp"
#include "incdfs/streaming.hpp"

namespace py = pybind11;
using namespace incdfs;

namespace {

std::vector<Edge> to_edges(const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  std::vector<Edge> out;
  out.reserve(pairs.size());
  for (auto [u, v] : pairs) out.push_back({u, v});
  return out;
}

std::vector<std::pair<VertexId, VertexId>> to_pairs(const std::vector<Edge>& edges) {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

py::dict counters_dict(const Counters& c) {
  py::dict d;
  d["edges_processed"] = c.edges_processed;
  d["rebuilds"] = c.rebuilds;
  d["insertions"] = c.insertions;
  d["vertices_remarked"] = c.vertices_remarked;
  return d;
}

py::dict row_dict(const MetricRow& r) {
  py::dict d;
  d["m"] = r.m;
  d["delta"] = r.delta;
  d["cumulative"] = r.cumulative;
  d["ls"] = r.ls;
  d["bristle"] = r.bristle;
  d["pc"] = r.pc;
  d["rebuilds"] = r.rebuilds;
  return d;
}

GraphMode mode_arg(const std::string& name) {
  const auto m = parse_mode(name);
  if (!m) throw py::value_error("mode must be 'undirected', 'directed' or 'dag'");
  return *m;
}

// Owns an algorithm together with the full edge set, so validity can be
// checked even when the algorithm prunes edges.
class Dfs {
 public:
  Dfs(const std::string& algorithm, std::size_t n, const std::string& mode)
      : mode_(mode_arg(mode)), all_(n, is_directed(mode_)) {
    const auto a = parse_algorithm(algorithm);
    if (!a) throw py::value_error("unknown algorithm '" + algorithm + "'");
    algo_ = make_algorithm(*a, n, mode_);
  }

  void insert(VertexId u, VertexId v) {
    algo_->insert(u, v);
    all_.add_edge(u, v);
  }

  void insert_batch(const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    const auto edges = to_edges(pairs);
    algo_->insert_batch(edges);
    for (const Edge& e : edges) all_.add_edge(e.u, e.v);
  }

  bool is_valid() const { return static_cast<bool>(is_valid_dfs_tree(all_, algo_->tree())); }
  const DfsTree& tree() const { return algo_->tree(); }
  py::dict counters() const { return counters_dict(algo_->counters()); }
  std::string algorithm() const { return std::string(to_string(algo_->kind())); }
  std::size_t m() const { return all_.m(); }

 private:
  GraphMode mode_;
  Graph all_;
  std::unique_ptr<IncrementalDfs> algo_;
};

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Incremental DFS tree maintenance";

  py::class_<DfsTree>(mod, "DfsTree")
      .def_property_readonly("n", &DfsTree::n)
      .def_readonly("parent", &DfsTree::parent)
      .def_readonly("children", &DfsTree::children)
      .def_readonly("depth", &DfsTree::depth)
      .def_readonly("dfn", &DfsTree::dfn)
      .def_readonly("size", &DfsTree::size)
      .def("is_ancestor", &DfsTree::is_ancestor, py::arg("a"), py::arg("d"));

  py::class_<StickProfile>(mod, "StickProfile")
      .def_readonly("length", &StickProfile::length)
      .def_readonly("bristle_size", &StickProfile::bristle_size)
      .def_readonly("bristle_root", &StickProfile::bristle_root);

  py::class_<Dfs>(mod, "Dfs")
      .def(py::init<const std::string&, std::size_t, const std::string&>(), py::arg("algorithm"), py::arg("n"),
           py::arg("mode") = "undirected")
      .def("insert", &Dfs::insert, py::arg("u"), py::arg("v"))
      .def("insert_batch", &Dfs::insert_batch, py::arg("edges"))
      .def("is_valid", &Dfs::is_valid)
      .def_property_readonly("tree", &Dfs::tree, py::return_value_policy::reference_internal)
      .def_property_readonly("counters", &Dfs::counters)
      .def_property_readonly("algorithm", &Dfs::algorithm)
      .def_property_readonly("m", &Dfs::m);

  py::class_<StreamState>(mod, "StreamState")
      .def(py::init<std::size_t, bool>(), py::arg("n"), py::arg("directed") = false)
      .def("stream_edge", &StreamState::stream_edge, py::arg("u"), py::arg("v"))
      .def("scc_query", &StreamState::scc_query)
      .def_property_readonly("tree", &StreamState::tree, py::return_value_policy::reference_internal)
      .def_property_readonly("retained_edges", &StreamState::retained_edges)
      .def_property_readonly("peak_retained", &StreamState::peak_retained)
      .def_property_readonly("streamed", &StreamState::streamed)
      .def_property_readonly("dropped", &StreamState::dropped)
      .def_property_readonly("duplicates", &StreamState::duplicates);

  mod.def("stick_profile", &stick_profile, py::arg("tree"));
  mod.def(
      "gen_gnm",
      [](std::size_t n, std::uint64_t m, std::uint64_t seed, const std::string& mode) {
        return to_pairs(gen_gnm(n, m, seed, mode_arg(mode)).edges);
      },
      py::arg("n"), py::arg("m"), py::arg("seed"), py::arg("mode") = "undirected");
  mod.def(
      "gen_gnp",
      [](std::size_t n, double p, std::uint64_t seed, const std::string& mode) {
        return to_pairs(gen_gnp(n, p, seed, mode_arg(mode)).edges);
      },
      py::arg("n"), py::arg("p"), py::arg("seed"), py::arg("mode") = "undirected");
  mod.def(
      "max_edges", [](std::size_t n, const std::string& mode) { return max_edges(n, mode_arg(mode)); },
      py::arg("n"), py::arg("mode") = "undirected");
  mod.def("predict_stick", &predict_stick, py::arg("n"), py::arg("m"), py::arg("c") = 1.0);
  mod.def(
      "compute_pc", [](const DfsTree& t, std::uint64_t m, bool directed) { return compute_pc(t, m, directed); },
      py::arg("tree"), py::arg("m"), py::arg("directed") = false);
  mod.def(
      "fit_exponent",
      [](const std::vector<std::pair<double, double>>& pts) {
        const PowerFit f = fit_exponent(pts);
        return py::make_tuple(f.slope, f.intercept, f.residual);
      },
      py::arg("points"));
  mod.def(
      "run_experiment",
      [](const std::string& algorithm, std::size_t n, std::uint64_t m, std::uint64_t seed,
         const std::string& mode, std::size_t sample_every) {
        ExperimentConfig cfg;
        cfg.algorithm = algorithm;
        cfg.mode = mode_arg(mode);
        cfg.n = n;
        cfg.m = m;
        cfg.seed = seed;
        cfg.sample_every = sample_every;
        const ExperimentResult res = run_experiment(cfg);
        py::list rows;
        for (const MetricRow& r : res.trials.front()) rows.append(row_dict(r));
        return rows;
      },
      py::arg("algorithm"), py::arg("n"), py::arg("m") = 0, py::arg("seed") = 1, py::arg("mode") = "undirected",
      py::arg("sample_every") = 1);
}
