// Brute-force reference implementations used as independent oracles. These
// deliberately avoid the library's search machinery: plain backtracking and
// exhaustive enumeration only, so they stay independent of the code paths
// they check.
#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "kroncover/graph.hpp"
#include "kroncover/perm.hpp"
#include "kroncover/subsets.hpp"

namespace oracle {

// All bijections g -> h preserving adjacency both ways, by chronological
// backtracking. With h == g this enumerates the automorphism group.
inline void extend_isomorphisms(const kc::Graph& g, const kc::Graph& h, std::vector<int>& map,
                                std::vector<char>& used, int v,
                                std::vector<kc::Permutation>& out, bool stop_at_first) {
  int n = g.vertex_count();
  if (v == n) {
    out.push_back(kc::Permutation(map));
    return;
  }
  for (int w = 0; w < n; ++w) {
    if (used[static_cast<std::size_t>(w)]) continue;
    bool ok = g.has_loop(v) == h.has_loop(w);
    for (int u = 0; u < v && ok; ++u)
      ok = g.adjacent(u, v) == h.adjacent(map[static_cast<std::size_t>(u)], w);
    if (!ok) continue;
    map[static_cast<std::size_t>(v)] = w;
    used[static_cast<std::size_t>(w)] = 1;
    extend_isomorphisms(g, h, map, used, v + 1, out, stop_at_first);
    used[static_cast<std::size_t>(w)] = 0;
    if (stop_at_first && !out.empty()) return;
  }
}

inline std::vector<kc::Permutation> brute_force_automorphisms(const kc::Graph& g) {
  std::vector<int> map(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<kc::Permutation> out;
  extend_isomorphisms(g, g, map, used, 0, out, false);
  return out;
}

inline std::optional<kc::Permutation> brute_force_isomorphism(const kc::Graph& g,
                                                              const kc::Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
    return std::nullopt;
  std::vector<int> map(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<kc::Permutation> out;
  extend_isomorphisms(g, h, map, used, 0, out, true);
  if (out.empty()) return std::nullopt;
  return out.front();
}

// Chromatic number by chronological backtracking over vertex ids; no
// propagation, no symmetry breaking beyond fixing nothing at all.
inline bool brute_colorable(const kc::Graph& g, int t, std::vector<int>& color, int v) {
  if (v == g.vertex_count()) return true;
  for (int c = 0; c < t; ++c) {
    bool ok = !g.has_loop(v);
    for (int u = 0; u < v && ok; ++u)
      ok = !g.adjacent(u, v) || color[static_cast<std::size_t>(u)] != c;
    if (!ok) continue;
    color[static_cast<std::size_t>(v)] = c;
    if (brute_colorable(g, t, color, v + 1)) return true;
  }
  return false;
}

inline int brute_force_chromatic(const kc::Graph& g) {
  if (g.vertex_count() == 0) return 0;
  for (int t = 1; t <= g.vertex_count(); ++t) {
    std::vector<int> color(static_cast<std::size_t>(g.vertex_count()), -1);
    if (brute_colorable(g, t, color, 0)) return t;
  }
  return g.vertex_count();
}

inline kc::Graph random_graph(int n, double p, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution flip(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (flip(rng)) edges.emplace_back(u, v);
  return kc::Graph(n, std::move(edges));
}

inline kc::Permutation random_permutation(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
  std::shuffle(img.begin(), img.end(), rng);
  return kc::Permutation(std::move(img));
}

inline kc::Graph relabel(const kc::Graph& g, const kc::Permutation& p) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) edges.emplace_back(p(u), p(v));
  return kc::Graph(g.vertex_count(), std::move(edges));
}

// Edge count of K(n,k) by direct enumeration of disjoint subset pairs.
inline long long kneser_edge_count(int n, int k) {
  auto subsets = kc::k_subsets(n, k);
  long long count = 0;
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t b = a + 1; b < subsets.size(); ++b)
      if ((subsets[a] & subsets[b]) == 0) ++count;
  return count;
}

}  // namespace oracle
