#include "incdfs/generators.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace incdfs {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::RandomGnm: return "random-gnm";
    case Provenance::RandomGnp: return "random-gnp";
    case Provenance::RandomDag: return "random-dag";
    case Provenance::WorstcaseAdfs1: return "worstcase-adfs1";
    case Provenance::WorstcaseFdfs: return "worstcase-fdfs";
    case Provenance::WorstcaseSdfs3: return "worstcase-sdfs3";
    case Provenance::Dataset: return "dataset";
  }
  return "?";
}

std::vector<std::span<const Edge>> UpdateSequence::batches() const {
  std::vector<std::span<const Edge>> out;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= edges.size(); ++i) {
    if (i == edges.size() || batch_id.empty() || batch_id[i] != batch_id[start]) {
      out.emplace_back(edges.data() + start, i - start);
      start = i;
    }
  }
  return out;
}

std::uint64_t max_edges(std::size_t n, GraphMode mode) {
  const std::uint64_t nn = n;
  const std::uint64_t pairs = nn < 2 ? 0 : nn * (nn - 1) / 2;
  return mode == GraphMode::Directed ? 2 * pairs : pairs;
}

namespace {

// Maps an index of the unordered-pair universe to (u, v), u < v, in
// lexicographic order over 1..n.
class PairIndex {
 public:
  explicit PairIndex(std::size_t n) : n_(n), offset_(n + 1, 0) {
    for (std::size_t u = 1; u < n; ++u) offset_[u + 1] = offset_[u] + (n - u);
  }
  Edge operator()(std::uint64_t k) const {
    // offset_[u] is the index of (u, u+1).
    auto it = std::upper_bound(offset_.begin() + 1, offset_.begin() + static_cast<std::ptrdiff_t>(n_), k);
    const auto u = static_cast<VertexId>(it - offset_.begin() - 1);
    return {u, static_cast<VertexId>(u + 1 + (k - offset_[u]))};
  }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> offset_;
};

std::vector<VertexId> random_order(std::size_t n, std::mt19937_64& rng) {
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{1});
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

}  // namespace

UpdateSequence gen_gnm(std::size_t n, std::uint64_t m, std::uint64_t seed, GraphMode mode) {
  const std::uint64_t universe = max_edges(n, mode);
  if (m > universe) {
    throw std::invalid_argument("m=" + std::to_string(m) + " exceeds the " + std::to_string(universe) +
                                " possible edges");
  }
  std::mt19937_64 rng(seed);
  UpdateSequence seq;
  seq.n = n;
  seq.directed = is_directed(mode);
  seq.dag = mode == GraphMode::Dag;
  seq.provenance = seq.dag ? Provenance::RandomDag : Provenance::RandomGnm;
  std::vector<VertexId> topo;
  if (seq.dag) topo = random_order(n, rng);

  const PairIndex pairs(n);
  auto decode = [&](std::uint64_t k) -> Edge {
    if (mode == GraphMode::Directed) {
      const auto u = static_cast<VertexId>(k / (n - 1) + 1);
      auto v = static_cast<VertexId>(k % (n - 1) + 1);
      if (v >= u) ++v;
      return {u, v};
    }
    const Edge e = pairs(k);
    if (mode == GraphMode::Dag) return {topo[e.u - 1], topo[e.v - 1]};
    return e;
  };

  // Fisher-Yates over the implicit universe; only displaced slots are stored.
  std::unordered_map<std::uint64_t, std::uint64_t> moved;
  auto slot = [&](std::uint64_t i) {
    auto it = moved.find(i);
    return it == moved.end() ? i : it->second;
  };
  seq.edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    std::uniform_int_distribution<std::uint64_t> pick(i, universe - 1);
    const std::uint64_t j = pick(rng);
    const std::uint64_t at_j = slot(j);
    moved[j] = slot(i);
    seq.edges.push_back(decode(at_j));
  }
  return seq;
}

UpdateSequence gen_gnp(std::size_t n, double p, std::uint64_t seed, GraphMode mode) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  UpdateSequence seq;
  seq.n = n;
  seq.directed = is_directed(mode);
  seq.dag = mode == GraphMode::Dag;
  seq.provenance = Provenance::RandomGnp;
  std::vector<VertexId> topo;
  if (seq.dag) topo = random_order(n, rng);
  std::bernoulli_distribution coin(p);
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = 1; v <= n; ++v) {
      if (u == v || (mode != GraphMode::Directed && v < u)) continue;
      if (!coin(rng)) continue;
      if (seq.dag) {
        seq.edges.push_back({topo[u - 1], topo[v - 1]});
      } else {
        seq.edges.push_back({u, v});
      }
    }
  }
  std::shuffle(seq.edges.begin(), seq.edges.end(), rng);
  return seq;
}

// --- datasets --------------------------------------------------------------

UpdateSequence parse_dataset(std::istream& in, bool directed) {
  struct Raw {
    std::uint64_t u, v;
    double t;
    bool deletion;
  };
  std::vector<Raw> raw;
  int columns = 0;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#' || line[first] == '%') continue;
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string s; fields >> s;) tok.push_back(s);
    auto fail = [&](const std::string& why) {
      return std::runtime_error("line " + std::to_string(lineno) + ": " + why);
    };
    if (tok.size() < 2 || tok.size() > 4) throw fail("expected 2 to 4 fields");
    if (columns == 0) columns = static_cast<int>(tok.size());
    if ((columns == 2) != (tok.size() == 2)) throw fail("timestamps present on some lines only");
    Raw r{};
    try {
      std::size_t used = 0;
      r.u = std::stoull(tok[0], &used);
      if (used != tok[0].size()) throw fail("bad vertex id");
      r.v = std::stoull(tok[1], &used);
      if (used != tok[1].size()) throw fail("bad vertex id");
      if (tok.size() == 3) r.t = std::stod(tok[2]);
      if (tok.size() == 4) {
        r.deletion = std::stod(tok[2]) < 0;
        r.t = std::stod(tok[3]);
      }
    } catch (const std::logic_error&) {
      throw fail("unparsable number");
    }
    raw.push_back(r);
  }
  if (raw.empty()) throw std::runtime_error("dataset contains no edges");

  const bool timed = columns > 2;
  if (timed) std::stable_sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) { return a.t < b.t; });

  UpdateSequence seq;
  seq.directed = directed;
  seq.provenance = Provenance::Dataset;
  std::unordered_map<std::uint64_t, VertexId> ids;
  auto id = [&](std::uint64_t x) {
    auto [it, fresh] = ids.emplace(x, static_cast<VertexId>(ids.size() + 1));
    return it->second;
  };
  std::unordered_set<std::uint64_t> seen;
  std::uint32_t batch = 0;
  double last_t = 0;
  bool any = false;
  for (const Raw& r : raw) {
    if (r.deletion || r.u == r.v) continue;
    const VertexId u = id(r.u), v = id(r.v);
    VertexId a = u, b = v;
    if (!directed && a > b) std::swap(a, b);
    if (!seen.insert((static_cast<std::uint64_t>(a) << 32) | b).second) continue;
    if (any && (!timed || r.t != last_t)) ++batch;
    last_t = r.t;
    any = true;
    seq.edges.push_back({u, v});
    seq.batch_id.push_back(batch);
  }
  seq.n = ids.size();
  return seq;
}

UpdateSequence load_dataset(const std::string& path, bool directed) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset " + path);
  return parse_dataset(in, directed);
}

// --- dump format -----------------------------------------------------------

void write_sequence(std::ostream& out, const UpdateSequence& seq) {
  out << seq.n << ' ' << seq.m() << ' ' << (seq.directed ? 1 : 0) << ' ' << (seq.dag ? 1 : 0) << '\n';
  for (std::size_t i = 0; i < seq.edges.size(); ++i) {
    const std::size_t batch = seq.batch_id.empty() ? i : seq.batch_id[i];
    out << seq.edges[i].u << ' ' << seq.edges[i].v << ' ' << batch << '\n';
  }
}

SequenceReader::SequenceReader(std::istream& in) : in_(in) {
  std::string header;
  if (!std::getline(in_, header)) throw std::runtime_error("sequence: missing header");
  std::istringstream h(header);
  int d = 0, g = 0;
  if (!(h >> n_ >> m_ >> d >> g)) throw std::runtime_error("sequence: malformed header");
  directed_ = d != 0;
  dag_ = g != 0;
}

std::optional<std::pair<Edge, std::uint32_t>> SequenceReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream f(line);
    std::uint64_t u = 0, v = 0, b = 0;
    if (!(f >> u >> v)) throw std::runtime_error("sequence: malformed line " + std::to_string(line_));
    if (!(f >> b)) b = 0;
    if (u == 0 || v == 0 || u > n_ || v > n_) {
      throw std::runtime_error("sequence: vertex out of range on line " + std::to_string(line_));
    }
    return std::make_pair(Edge{static_cast<VertexId>(u), static_cast<VertexId>(v)},
                          static_cast<std::uint32_t>(b));
  }
  return std::nullopt;
}

UpdateSequence read_sequence(std::istream& in) {
  SequenceReader reader(in);
  UpdateSequence seq;
  seq.n = reader.n();
  seq.directed = reader.directed();
  seq.dag = reader.dag();
  seq.provenance = Provenance::Dataset;
  while (auto item = reader.next()) {
    seq.edges.push_back(item->first);
    seq.batch_id.push_back(item->second);
  }
  if (seq.edges.size() != reader.declared_m()) throw std::runtime_error("sequence: edge count differs from header");
  return seq;
}

}  // namespace incdfs
