#include <cmath>
#include <stdexcept>
#include <string>

#include "incdfs/generators.hpp"

namespace incdfs {

namespace {

class Builder {
 public:
  Builder(std::size_t n, GraphMode mode, Provenance p) {
    seq_.n = n;
    seq_.directed = is_directed(mode);
    seq_.dag = mode == GraphMode::Dag;
    seq_.provenance = p;
  }

  void add(VertexId u, VertexId v, std::uint32_t stage = 0, bool trigger = false) {
    seq_.edges.push_back({u, v});
    seq_.tags.push_back({stage, trigger});
  }

  // Edges along consecutive vertices of `ids`.
  void chain(const std::vector<VertexId>& ids) {
    for (std::size_t i = 1; i < ids.size(); ++i) add(ids[i - 1], ids[i]);
  }

  // The first `count` pairs (ids[i], ids[j]), i < j, in lexicographic
  // order, skipping consecutive pairs (the chain itself).
  void dense(const std::vector<VertexId>& ids, std::size_t count) {
    for (std::size_t i = 0; i < ids.size() && count > 0; ++i) {
      for (std::size_t j = i + 2; j < ids.size() && count > 0; ++j, --count) add(ids[i], ids[j]);
    }
    if (count > 0) throw std::invalid_argument("not enough vertex pairs for the requested edges");
  }

  UpdateSequence take() { return std::move(seq_); }

 private:
  UpdateSequence seq_;
};

std::vector<VertexId> block(VertexId& next, std::size_t count) {
  std::vector<VertexId> ids(count);
  for (auto& v : ids) v = next++;
  return ids;
}

void check_density(std::size_t n, std::uint64_t m) {
  if (n < 2 || m < n || m > max_edges(n, GraphMode::Undirected)) {
    throw std::invalid_argument("need n <= m <= n(n-1)/2, got n=" + std::to_string(n) +
                                " m=" + std::to_string(m));
  }
}

}  // namespace

UpdateSequence gen_worstcase_adfs1(std::size_t n, std::uint64_t m) {
  check_density(n, m);
  const auto k = static_cast<std::size_t>(std::max(2.0, std::round(std::sqrt(double(m) / double(n)))));
  const std::size_t p = std::max<std::size_t>(1, std::min<std::size_t>(m / (2 * k), n / 4));
  const std::size_t fixed = 3 * k + 3 + p;  // A, D, D', X and the first vertex of B
  if (n < fixed + k + 2) {
    throw std::invalid_argument("n=" + std::to_string(n) + " too small: need at least " +
                                std::to_string(fixed + k + 2) + " vertices for one stage");
  }
  const std::size_t stages = (n - fixed) / (k + 2);
  const std::size_t l = stages * k + 1;

  VertexId next = 1;
  const auto A = block(next, k);
  const auto B = block(next, l);
  const auto X = block(next, p);
  const auto D = block(next, k + 1);
  const auto D2 = block(next, k + 1);

  Builder out(n, GraphMode::Undirected, Provenance::WorstcaseAdfs1);
  std::vector<VertexId> spine(A);
  spine.insert(spine.end(), B.begin(), B.end());
  spine.insert(spine.end(), X.begin(), X.end());
  out.chain(spine);
  out.chain(D);
  out.add(B[0], D2[0]);
  out.chain(D2);
  for (VertexId a : A) {
    for (VertexId x : X) out.add(a, x);
  }

  // Stage s re-roots the subtree holding A at beta(s) = B[(s-1)k] below the
  // deepest vertex of a sibling chain, then the witness back edge from the
  // old top of A to B[sk] pulls the next k vertices of B up above X. The
  // reversed block, lengthened by a two-vertex tail, becomes the sibling
  // chain two stages later.
  std::vector<VertexId> tail_end;
  for (std::size_t s = 1; s <= stages; ++s) {
    const auto st = static_cast<std::uint32_t>(s);
    const VertexId t1 = next++, t2 = next++;
    out.add(B[(s - 1) * k + 1], t1, st);
    out.add(t1, t2, st);
    tail_end.push_back(t2);

    const VertexId top = s % 2 == 1 ? A.front() : A.back();
    out.add(top, B[s * k], st, true);
    const VertexId deep = s == 1 ? D.back() : s == 2 ? D2.back() : tail_end[s - 3];
    out.add(deep, B[(s - 1) * k], st, true);
  }
  return out.take();
}

UpdateSequence gen_worstcase_fdfs(std::size_t n, std::uint64_t m) {
  check_density(n, m);
  if (n % 2 != 0) throw std::invalid_argument("n must be even");
  const std::size_t half = n / 2;
  // m counts the whole sequence: the chain of A, the n/2 triggers, and
  // everything inside B (its chain included).
  const std::uint64_t inside = m - (n - 1);
  const std::uint64_t room = max_edges(half, GraphMode::Undirected);
  if (inside < half - 1 || inside > room) {
    throw std::invalid_argument(std::to_string(inside) + " edges do not fit inside B (at most " +
                                std::to_string(room) + ")");
  }
  VertexId next = 1;
  const auto A = block(next, half);
  const auto B = block(next, half);
  Builder out(n, GraphMode::Dag, Provenance::WorstcaseFdfs);
  out.chain(A);
  out.chain(B);
  out.dense(B, inside - (half - 1));
  for (std::size_t i = 0; i < half; ++i) out.add(A[i], B[0], static_cast<std::uint32_t>(i + 1), true);
  return out.take();
}

Sdfs3WorstcaseShape sdfs3_worstcase_shape(std::uint64_t m) {
  Sdfs3WorstcaseShape s;
  s.k = std::max<std::size_t>(3, static_cast<std::size_t>(std::sqrt(double(m) / 2.0)));
  s.r = s.k;
  s.q = s.r + s.k + 1;
  s.p = s.q + s.r + s.k;
  s.e_z = (s.r - 1) * (s.r - 2) / 2;  // Z complete
  s.e_y = s.e_z + s.k + 1;
  s.e_x = s.e_z + s.e_y;
  s.vertices = 3 * s.k + s.p + s.q + s.r;
  return s;
}

UpdateSequence gen_worstcase_sdfs3(std::size_t n, std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  const Sdfs3WorstcaseShape s = sdfs3_worstcase_shape(m);
  if (n < s.vertices) {
    throw std::invalid_argument("n=" + std::to_string(n) + " too small: the three chains need " +
                                std::to_string(s.vertices) + " vertices");
  }
  VertexId next = 1;
  const auto A = block(next, s.k);
  const auto X = block(next, s.p);
  const auto B = block(next, s.k);
  const auto Y = block(next, s.q);
  const auto C = block(next, s.k);
  const auto Z = block(next, s.r);

  Builder out(n, GraphMode::Undirected, Provenance::WorstcaseSdfs3);
  auto join = [](std::vector<VertexId> a, const std::vector<VertexId>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  out.chain(join(A, X));
  out.chain(join(B, Y));
  out.chain(join(C, Z));
  out.dense(Z, s.e_z);
  out.dense(Y, s.e_y);
  out.dense(X, s.e_x);

  // With p = q + r + k the phase-transition size tests fall the right way
  // without extra vertices: T(b_1) ties with T(a_j) (ties rebuild y's side)
  // and T(a_{j+1}) is one vertex smaller than T(c_j).
  std::uint32_t stage = 0;
  for (std::size_t j = 0; j < s.k; ++j) {
    for (std::size_t i = 0; i < s.k; ++i) out.add(B[i], C[j], ++stage, true);
    if (j + 1 < s.k) {
      out.add(A[j], C[j], stage);
      out.add(A[j + 1], C[j], stage);
    }
  }
  return out.take();
}

}  // namespace incdfs
