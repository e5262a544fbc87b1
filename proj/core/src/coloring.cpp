#include "kroncover/coloring.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "kroncover/errors.hpp"
#include "kroncover/kneser.hpp"
#include "kroncover/subsets.hpp"

namespace kc {

int Coloring::colors_used() const {
  std::set<int> used(assignment.begin(), assignment.end());
  return static_cast<int>(used.size());
}

bool is_proper(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.assignment.size()) != g.vertex_count()) return false;
  for (int x : c.assignment)
    if (x < 0 || x >= c.palette) return false;
  for (const auto& [u, v] : g.edges())
    if (c.assignment[static_cast<std::size_t>(u)] == c.assignment[static_cast<std::size_t>(v)])
      return false;  // loops land here too
  return true;
}

int ChromaticResult::value() const {
  if (!exact) throw budget_error("chromatic_number_exact: budget exhausted, only bounds known");
  return upper;
}

namespace {

std::vector<int> static_degrees(const Graph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  return deg;
}

// Greedy clique, seeded from every vertex in degree order.
int clique_lower_bound(const Graph& g, const std::vector<int>& deg) {
  int n = g.vertex_count();
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (deg[static_cast<std::size_t>(a)] != deg[static_cast<std::size_t>(b)])
      return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
    return a < b;
  });
  int best = n == 0 ? 0 : 1;
  for (int seed : order) {
    std::vector<int> clique{seed};
    for (int v : order) {
      if (v == seed) continue;
      bool ok = true;
      for (int u : clique)
        if (!g.adjacent(u, v)) {
          ok = false;
          break;
        }
      if (ok) clique.push_back(v);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

Coloring dsatur_greedy(const Graph& g, const std::vector<int>& deg) {
  int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<std::set<int>> sat(static_cast<std::size_t>(n));
  int palette = 0;
  for (int round = 0; round < n; ++round) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (color[static_cast<std::size_t>(v)] >= 0) continue;
      if (pick < 0) { pick = v; continue; }
      auto key = [&](int x) {
        return std::pair<int, int>(static_cast<int>(sat[static_cast<std::size_t>(x)].size()),
                                   deg[static_cast<std::size_t>(x)]);
      };
      if (key(v) > key(pick)) pick = v;
    }
    int c = 0;
    while (sat[static_cast<std::size_t>(pick)].count(c)) ++c;
    color[static_cast<std::size_t>(pick)] = c;
    palette = std::max(palette, c + 1);
    for (int u : g.neighbors(pick))
      if (color[static_cast<std::size_t>(u)] < 0) sat[static_cast<std::size_t>(u)].insert(c);
  }
  return Coloring{std::move(color), palette};
}

// Decision search: is g properly colorable with t colors? Domains are
// color bitmasks; a vertex whose domain drops to a single color is assigned
// immediately, and a fresh color may only enter as the lowest unused one.
class DecisionSearch {
 public:
  DecisionSearch(const Graph& g, int t, const std::vector<int>& deg, long long* nodes,
                 long long budget)
      : g_(g), n_(g.vertex_count()), t_(t), deg_(deg), nodes_(nodes), budget_(budget) {
    if (t_ > 32) throw budget_error("chromatic decision: palettes above 32 unsupported");
    std::uint32_t full = t_ == 32 ? 0xffffffffu : ((1u << t_) - 1);
    avail_.assign(static_cast<std::size_t>(n_), full);
    color_.assign(static_cast<std::size_t>(n_), -1);
  }

  std::optional<Coloring> run() {
    if (n_ == 0) return Coloring{{}, t_};
    if (t_ == 0) return std::nullopt;
    if (search(0)) return Coloring{color_, t_};
    return std::nullopt;
  }

 private:
  bool assign(int v, int c, std::vector<std::pair<int, std::uint32_t>>& trail,
              std::vector<int>& assigned, std::vector<int>& forced) {
    if (++*nodes_ > budget_) throw budget_error("chromatic decision: node budget exceeded");
    color_[static_cast<std::size_t>(v)] = c;
    assigned.push_back(v);
    max_used_ = std::max(max_used_, c);
    std::uint32_t bit = 1u << c;
    for (int u : g_.neighbors(v)) {
      if (color_[static_cast<std::size_t>(u)] >= 0) continue;
      std::uint32_t& a = avail_[static_cast<std::size_t>(u)];
      if (a & bit) {
        a &= ~bit;
        trail.emplace_back(u, bit);
        if (a == 0) return false;
        if (std::popcount(a) == 1) forced.push_back(u);
      }
    }
    return true;
  }

  bool search(int colored) {
    if (colored == n_) return true;
    int limit = std::min(max_used_ + 1, t_ - 1);
    std::uint32_t limit_mask = limit >= 31 ? 0xffffffffu : ((1u << (limit + 1)) - 1);
    int v = -1, v_allowed = 0;
    for (int u = 0; u < n_; ++u) {
      if (color_[static_cast<std::size_t>(u)] >= 0) continue;
      int cnt = std::popcount(avail_[static_cast<std::size_t>(u)] & limit_mask);
      if (v < 0 || cnt < v_allowed ||
          (cnt == v_allowed && deg_[static_cast<std::size_t>(u)] > deg_[static_cast<std::size_t>(v)])) {
        v = u;
        v_allowed = cnt;
      }
    }
    std::uint32_t options = avail_[static_cast<std::size_t>(v)] & limit_mask;
    while (options) {
      int c = std::countr_zero(options);
      options &= options - 1;
      std::vector<std::pair<int, std::uint32_t>> trail;
      std::vector<int> assigned;
      std::vector<int> forced;
      int prev_max = max_used_;
      bool ok = assign(v, c, trail, assigned, forced);
      while (ok && !forced.empty()) {
        int w = forced.back();
        forced.pop_back();
        if (color_[static_cast<std::size_t>(w)] >= 0) continue;
        ok = assign(w, std::countr_zero(avail_[static_cast<std::size_t>(w)]), trail, assigned,
                    forced);
      }
      if (ok && search(colored + static_cast<int>(assigned.size()))) return true;
      for (auto it = trail.rbegin(); it != trail.rend(); ++it)
        avail_[static_cast<std::size_t>(it->first)] |= it->second;
      for (int u : assigned) color_[static_cast<std::size_t>(u)] = -1;
      max_used_ = prev_max;
    }
    return false;
  }

  const Graph& g_;
  int n_, t_;
  const std::vector<int>& deg_;
  long long* nodes_;
  long long budget_;
  std::vector<std::uint32_t> avail_;
  std::vector<int> color_;
  int max_used_ = -1;
};

}  // namespace

ChromaticResult chromatic_number_exact(const Graph& g, std::optional<int> upper_hint,
                                       long long node_budget) {
  if (!g.is_simple())
    throw std::invalid_argument("chromatic_number_exact: graph has loops, no proper coloring exists");
  ChromaticResult result;
  int n = g.vertex_count();
  if (n == 0) {
    result.lower = result.upper = 0;
    result.exact = true;
    return result;
  }
  auto deg = static_degrees(g);
  result.witness = dsatur_greedy(g, deg);
  result.upper = result.witness.palette;
  result.lower = clique_lower_bound(g, deg);
  if (upper_hint && *upper_hint < result.upper && *upper_hint >= result.lower) {
    long long nodes = 0;
    try {
      DecisionSearch hint_try(g, *upper_hint, deg, &nodes, node_budget);
      if (auto c = hint_try.run()) {
        result.witness = *c;
        result.upper = *upper_hint;
      }
    } catch (const budget_error&) {
    }
    result.nodes += nodes;
  }
  for (int t = result.lower; t < result.upper; ++t) {
    long long nodes = 0;
    try {
      DecisionSearch search(g, t, deg, &nodes, node_budget - result.nodes);
      auto c = search.run();
      result.nodes += nodes;
      if (c) {
        result.witness = *c;
        result.upper = t;
        break;
      }
      result.lower = t + 1;
    } catch (const budget_error&) {
      result.nodes += nodes;
      result.exact = false;
      return result;
    }
  }
  result.exact = true;
  result.witness.palette = result.upper;
  return result;
}

Coloring theorem3_coloring(int n, int k, int i) {
  FamilyIndex idx(n, k, i);
  if (i >= k) throw std::invalid_argument("theorem3_coloring: requires i < k");
  if (n == 2 * k) {
    Graph base = g_graph(n, k, i);
    std::vector<int> assignment(static_cast<std::size_t>(base.vertex_count()), -1);
    for (int v = 0; v < base.vertex_count(); ++v) {
      auto nb = base.neighbors(v);
      if (nb.size() != 1)
        throw std::logic_error("theorem3_coloring: G_i(2k,k) is not a perfect matching");
      assignment[static_cast<std::size_t>(v)] = v < nb[0] ? 0 : 1;
    }
    return Coloring{std::move(assignment), 2};
  }
  Coloring smaller = theorem3_coloring(n - 1, k, i);
  int count = static_cast<int>(binomial(n, k));
  int prefix = static_cast<int>(binomial(n - 1, k));
  int fresh = n - 2 * k + 1;  // 0-based id of the new color
  std::vector<int> assignment(static_cast<std::size_t>(count));
  for (int r = 0; r < count; ++r)
    assignment[static_cast<std::size_t>(r)] =
        r < prefix ? smaller.assignment[static_cast<std::size_t>(r)] : fresh;
  return Coloring{std::move(assignment), n - 2 * k + 2};
}

int lovasz_bound(int m_certified) {
  if (m_certified < -1) throw std::invalid_argument("lovasz_bound: m must be >= -1");
  return m_certified + 3;
}

}  // namespace kc
