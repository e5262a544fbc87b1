#include "kroncover/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "kroncover/errors.hpp"

namespace kc {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

// Checked 64-bit ops; elimination falls back to BigInt when these fire.
long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

template <typename T>
T t_abs(const T& x) {
  return x < 0 ? T(-x) : x;
}

template <typename T>
struct Ops {
  static T mul(const T& a, const T& b) { return a * b; }
  static T sub(const T& a, const T& b) { return a - b; }
};
template <>
struct Ops<long long> {
  static long long mul(long long a, long long b) { return checked_mul(a, b); }
  static long long sub(long long a, long long b) { return checked_sub(a, b); }
};

// In-place Smith reduction; returns the diagonal (invariant factor chain).
template <typename T>
std::vector<T> smith_diagonal(std::vector<std::vector<T>>& m) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::vector<T> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // pivot: minimal nonzero absolute value in the remaining submatrix
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        if (pr == rows || t_abs(m[i][j]) < t_abs(m[pr][pc])) {
          pr = i;
          pc = j;
        }
      }
    if (pr == rows) break;  // submatrix is zero
    std::swap(m[t], m[pr]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        T q = m[i][t] / m[t][t];
        if (q != 0)
          for (std::size_t j = t; j < cols; ++j)
            m[i][j] = Ops<T>::sub(m[i][j], Ops<T>::mul(q, m[t][j]));
        if (m[i][t] != 0) {  // remainder smaller than pivot: promote it
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        T q = m[t][j] / m[t][t];
        if (q != 0)
          for (std::size_t i = t; i < rows; ++i)
            m[i][j] = Ops<T>::sub(m[i][j], Ops<T>::mul(q, m[i][t]));
        if (m[t][j] != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // pivot must divide every remaining entry for the divisibility chain
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols && clean; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t jj = t; jj < cols; ++jj)
              m[t][jj] = Ops<T>::sub(m[t][jj], Ops<T>::mul(T(-1), m[i][jj]));
            clean = false;
          }
    }
    diag.push_back(t_abs(m[t][t]));
    ++t;
  }
  return diag;
}

}  // namespace

SmithSummary smith_normal_form(std::vector<std::vector<long long>> matrix) {
  if (!matrix.empty()) {
    std::size_t cols = matrix[0].size();
    for (const auto& row : matrix)
      if (row.size() != cols) throw std::invalid_argument("smith_normal_form: ragged matrix");
    if (static_cast<long long>(matrix.size()) * static_cast<long long>(cols) > 25'000'000)
      throw budget_error("smith_normal_form: matrix too large");
  }
  SmithSummary out;
  try {
    auto m = matrix;  // keep the original for the BigInt retry
    auto diag = smith_diagonal(m);
    out.rank = static_cast<long long>(diag.size());
    for (const auto& d : diag) out.invariant_factors.push_back(d);
    return out;
  } catch (const Overflow&) {
    std::vector<std::vector<BigInt>> big(matrix.size());
    for (std::size_t i = 0; i < matrix.size(); ++i)
      big[i].assign(matrix[i].begin(), matrix[i].end());
    auto diag = smith_diagonal(big);
    out.rank = static_cast<long long>(diag.size());
    for (const auto& d : diag) {
      if (d > BigInt(std::numeric_limits<long long>::max()))
        throw std::overflow_error("smith_normal_form: invariant factor exceeds 64 bits");
      out.invariant_factors.push_back(d.convert_to<long long>());
    }
    return out;
  }
}

namespace {

// Boundary matrix from dimension d simplices to dimension d-1 simplices.
// d = 0 produces the augmentation map onto the empty simplex.
std::vector<std::vector<long long>> boundary_matrix(
    const std::vector<std::vector<int>>& faces, const std::vector<std::vector<int>>& simplices) {
  std::map<std::vector<int>, int> face_index;
  for (std::size_t i = 0; i < faces.size(); ++i) face_index[faces[i]] = static_cast<int>(i);
  std::vector<std::vector<long long>> m(faces.size(),
                                        std::vector<long long>(simplices.size(), 0));
  for (std::size_t j = 0; j < simplices.size(); ++j) {
    const auto& s = simplices[j];
    for (std::size_t l = 0; l < s.size(); ++l) {
      std::vector<int> face;
      face.reserve(s.size() - 1);
      for (std::size_t x = 0; x < s.size(); ++x)
        if (x != l) face.push_back(s[x]);
      auto it = face_index.find(face);
      if (it == face_index.end())
        throw std::logic_error("boundary_matrix: face missing from complex");
      m[static_cast<std::size_t>(it->second)][j] += (l % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

}  // namespace

HomologyReport reduced_homology(const SimplicialComplex& k, int up_to_dim,
                                long long simplex_budget) {
  if (up_to_dim < 0) throw std::invalid_argument("reduced_homology: negative dimension");
  HomologyReport report;
  if (k.facets.empty()) {
    report.dims.resize(static_cast<std::size_t>(up_to_dim) + 1);
    return report;
  }
  std::vector<std::vector<std::vector<int>>> simplices;  // by dimension, -1 shifted by 1
  for (int d = -1; d <= up_to_dim + 1; ++d)
    simplices.push_back(simplices_of_dimension(k, d, simplex_budget));

  std::vector<SmithSummary> snf;  // snf[d+1] = SNF of boundary from dim d
  for (int d = 0; d <= up_to_dim + 1; ++d) {
    const auto& faces = simplices[static_cast<std::size_t>(d)];      // dim d-1
    const auto& cells = simplices[static_cast<std::size_t>(d + 1)];  // dim d
    if (cells.empty() || faces.empty()) {
      snf.push_back(SmithSummary{});
      continue;
    }
    snf.push_back(smith_normal_form(boundary_matrix(faces, cells)));
  }

  for (int d = 0; d <= up_to_dim; ++d) {
    HomologyReport::Dimension dim;
    long long cells = static_cast<long long>(simplices[static_cast<std::size_t>(d + 1)].size());
    dim.betti = cells - snf[static_cast<std::size_t>(d)].rank -
                snf[static_cast<std::size_t>(d + 1)].rank;
    for (long long f : snf[static_cast<std::size_t>(d + 1)].invariant_factors)
      if (f > 1) dim.torsion.push_back(f);
    report.dims.push_back(std::move(dim));
  }
  return report;
}

namespace {

// Edge-path group presentation from the 2-skeleton, simplified by Tietze
// moves. Returns true when the presentation collapses to the trivial one.
enum class TietzeOutcome { trivial, stuck, over_budget };

TietzeOutcome tietze_collapse(const SimplicialComplex& k, long long budget) {
  auto edges = simplices_of_dimension(k, 1);
  auto triangles = simplices_of_dimension(k, 2);

  // BFS spanning tree over the 1-skeleton
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(k.ground));
  for (const auto& e : edges) {
    adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
    adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
  }
  std::vector<char> tree_edge(edges.size(), 0);
  std::map<std::pair<int, int>, int> edge_id;
  for (std::size_t i = 0; i < edges.size(); ++i) edge_id[{edges[i][0], edges[i][1]}] = static_cast<int>(i);
  std::vector<char> visited(static_cast<std::size_t>(k.ground), 0);
  std::deque<int> queue{0};
  visited[0] = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (visited[static_cast<std::size_t>(v)]) continue;
      visited[static_cast<std::size_t>(v)] = 1;
      tree_edge[static_cast<std::size_t>(edge_id[{std::min(u, v), std::max(u, v)}])] = 1;
      queue.push_back(v);
    }
  }
  for (char v : visited)
    if (!v) return TietzeOutcome::stuck;  // disconnected: caller handles

  // signed generator word per oriented edge; tree edges vanish
  auto gen_of = [&](int u, int v) -> int {  // +-(id+1), 0 for tree edges
    int id = edge_id[{std::min(u, v), std::max(u, v)}];
    if (tree_edge[static_cast<std::size_t>(id)]) return 0;
    return u < v ? id + 1 : -(id + 1);
  };

  std::vector<std::vector<int>> relators;
  for (const auto& t : triangles) {
    std::vector<int> word;
    for (auto [u, v] : {std::pair{t[0], t[1]}, std::pair{t[1], t[2]}, std::pair{t[2], t[0]}}) {
      int g = gen_of(u, v);
      if (g != 0) word.push_back(g);
    }
    relators.push_back(std::move(word));
  }

  std::vector<char> alive(edges.size() + 1, 0);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (!tree_edge[i]) alive[i + 1] = 1;

  auto reduce = [](std::vector<int>& w) {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<int> out;
      for (int g : w) {
        if (!out.empty() && out.back() == -g) {
          out.pop_back();
          changed = true;
        } else {
          out.push_back(g);
        }
      }
      while (out.size() >= 2 && out.front() == -out.back()) {  // cyclic reduction
        out.erase(out.begin());
        out.pop_back();
        changed = true;
      }
      w = std::move(out);
    }
  };

  long long work = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto& w : relators) reduce(w);
    relators.erase(std::remove_if(relators.begin(), relators.end(),
                                  [](const std::vector<int>& w) { return w.empty(); }),
                   relators.end());

    // occurrence counts
    std::map<int, long long> occurrences;
    std::map<int, int> only_relator;
    for (std::size_t r = 0; r < relators.size(); ++r)
      for (int g : relators[r]) {
        occurrences[std::abs(g)]++;
        only_relator[std::abs(g)] = static_cast<int>(r);
      }

    // rule 1: length-1 relator kills its generator
    for (std::size_t r = 0; r < relators.size() && !progress; ++r) {
      if (relators[r].size() != 1) continue;
      int g = std::abs(relators[r][0]);
      alive[static_cast<std::size_t>(g)] = 0;
      for (auto& w : relators)
        w.erase(std::remove_if(w.begin(), w.end(), [&](int x) { return std::abs(x) == g; }),
                w.end());
      progress = true;
    }
    if (progress) continue;

    // rule 2: length-2 relator x^s y^t expresses y = x^{-st}
    for (std::size_t r = 0; r < relators.size() && !progress; ++r) {
      if (relators[r].size() != 2) continue;
      int a = relators[r][0], b = relators[r][1];
      if (std::abs(a) == std::abs(b)) {
        // x^{2s} = 1: not a free substitution; skip (handled only if some
        // other rule kills x)
        continue;
      }
      int x = a, y = b;  // replace |y| by x^{-sign(y)*...}
      int gy = std::abs(y);
      int rep = (y > 0) ? -x : x;  // y = x^{-1*sign(a)...}: y^{sign(y)} = x^{-sign(x)}
      for (auto& w : relators) {
        std::vector<int> out;
        for (int g : w) {
          if (std::abs(g) != gy) {
            out.push_back(g);
          } else {
            out.push_back(g > 0 ? rep : -rep);
          }
        }
        w = std::move(out);
        work += static_cast<long long>(w.size());
        if (work > budget) return TietzeOutcome::over_budget;
      }
      alive[static_cast<std::size_t>(gy)] = 0;
      progress = true;
    }
    if (progress) continue;

    // rule 3: a generator occurring exactly once anywhere can be solved for
    for (const auto& [g, cnt] : occurrences) {
      if (cnt != 1 || !alive[static_cast<std::size_t>(g)]) continue;
      int r = only_relator[g];
      relators.erase(relators.begin() + r);
      alive[static_cast<std::size_t>(g)] = 0;
      progress = true;
      break;
    }
  }

  for (std::size_t g = 1; g < alive.size(); ++g)
    if (alive[g]) return TietzeOutcome::stuck;
  return TietzeOutcome::trivial;
}

}  // namespace

ConnectivityEvidence connectivity_evidence(const SimplicialComplex& k, int m,
                                           long long simplex_budget, long long tietze_budget) {
  if (m < -1) throw std::invalid_argument("connectivity_evidence: m must be >= -1");
  ConnectivityEvidence ev;
  ev.nonempty = !k.facets.empty();
  if (!ev.nonempty) {
    ev.verdict = "fails";
    return ev;
  }
  if (m == -1) {
    ev.verdict = "(-1)-connected (proved)";
    return ev;
  }

  // 1-skeleton connectivity
  auto edges = simplices_of_dimension(k, 1, simplex_budget);
  std::vector<std::pair<int, int>> es;
  es.reserve(edges.size());
  for (const auto& e : edges) es.emplace_back(e[0], e[1]);
  ev.connected = is_connected(Graph(k.ground, std::move(es)));
  if (!ev.connected) {
    ev.verdict = "fails";
    return ev;
  }
  if (m == 0) {
    ev.verdict = "0-connected (proved)";
    return ev;
  }

  auto hom = reduced_homology(k, m, simplex_budget);
  ev.homology_vanishes_to_m = true;
  for (int d = 1; d <= m; ++d) {
    const auto& dim = hom.dims[static_cast<std::size_t>(d)];
    if (dim.betti != 0 || !dim.torsion.empty()) ev.homology_vanishes_to_m = false;
  }
  if (!ev.homology_vanishes_to_m) {
    ev.verdict = "fails";
    return ev;
  }

  switch (tietze_collapse(k, tietze_budget)) {
    case TietzeOutcome::trivial:
      ev.pi1 = ConnectivityEvidence::Pi1::verified;
      break;
    default:
      ev.pi1 = ConnectivityEvidence::Pi1::inconclusive;
      break;
  }
  if (m == 1 && ev.pi1 == ConnectivityEvidence::Pi1::verified)
    ev.verdict = "1-connected (proved)";
  else
    ev.verdict = "consistent with " + std::to_string(m) + "-connected";
  return ev;
}

}  // namespace kc
