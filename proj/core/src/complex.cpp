#include "kroncover/complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "kroncover/canonical.hpp"
#include "kroncover/errors.hpp"

namespace kc {

SimplicialComplex::SimplicialComplex(int ground_size, std::vector<std::vector<int>> facet_list)
    : ground(ground_size), facets(std::move(facet_list)) {
  std::vector<char> seen(static_cast<std::size_t>(ground), 0);
  for (auto& f : facets) {
    if (f.empty()) throw std::invalid_argument("SimplicialComplex: empty facet");
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int v : f) {
      if (v < 0 || v >= ground)
        throw std::invalid_argument("SimplicialComplex: facet vertex out of range");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (std::size_t a = 0; a < facets.size(); ++a)
    for (std::size_t b = 0; b < facets.size(); ++b)
      if (a != b && std::includes(facets[b].begin(), facets[b].end(), facets[a].begin(),
                                  facets[a].end()))
        throw std::invalid_argument("SimplicialComplex: facet contained in another facet");
  for (int v = 0; v < ground; ++v)
    if (!seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("SimplicialComplex: ground vertex in no facet");
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

SimplicialComplex neighborhood_complex(const Graph& g) {
  if (!g.is_simple())
    throw std::invalid_argument("neighborhood_complex: graph has a loop");
  std::vector<std::vector<int>> hoods;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    if (!nb.empty()) hoods.push_back(std::move(nb));
  }
  std::sort(hoods.begin(), hoods.end());
  hoods.erase(std::unique(hoods.begin(), hoods.end()), hoods.end());
  std::vector<std::vector<int>> maximal;
  for (std::size_t a = 0; a < hoods.size(); ++a) {
    bool contained = false;
    for (std::size_t b = 0; b < hoods.size() && !contained; ++b)
      contained = a != b && hoods[a].size() < hoods[b].size() &&
                  std::includes(hoods[b].begin(), hoods[b].end(), hoods[a].begin(),
                                hoods[a].end());
    if (!contained) maximal.push_back(hoods[a]);
  }
  // Ground set: vertices appearing in some neighborhood, compacted to keep
  // ids dense. Vertices of g with neighbors keep their relative order.
  std::vector<char> present(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& f : maximal)
    for (int v : f) present[static_cast<std::size_t>(v)] = 1;
  std::vector<int> newid(static_cast<std::size_t>(g.vertex_count()), -1);
  int ground = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (present[static_cast<std::size_t>(v)]) newid[static_cast<std::size_t>(v)] = ground++;
  for (auto& f : maximal)
    for (int& v : f) v = newid[static_cast<std::size_t>(v)];
  return SimplicialComplex(ground, std::move(maximal));
}

std::vector<std::vector<int>> simplices_of_dimension(const SimplicialComplex& k, int d,
                                                     long long budget) {
  if (d < 0) {
    if (k.facets.empty()) return {};
    return {{}};  // the empty simplex, used by reduced chain complexes
  }
  std::set<std::vector<int>> out;
  std::vector<int> pick;
  for (const auto& f : k.facets) {
    if (static_cast<int>(f.size()) < d + 1) continue;
    // enumerate (d+1)-subsets of f
    std::vector<int> idx(static_cast<std::size_t>(d + 1));
    for (int j = 0; j <= d; ++j) idx[static_cast<std::size_t>(j)] = j;
    while (true) {
      pick.clear();
      for (int j = 0; j <= d; ++j) pick.push_back(f[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])]);
      out.insert(pick);
      if (static_cast<long long>(out.size()) > budget)
        throw budget_error("simplices_of_dimension: simplex budget exceeded");
      int j = d;
      while (j >= 0 && idx[static_cast<std::size_t>(j)] == static_cast<int>(f.size()) - (d + 1 - j)) --j;
      if (j < 0) break;
      ++idx[static_cast<std::size_t>(j)];
      for (int l = j + 1; l <= d; ++l) idx[static_cast<std::size_t>(l)] = idx[static_cast<std::size_t>(l - 1)] + 1;
    }
  }
  return {out.begin(), out.end()};
}

std::optional<std::vector<int>> complexes_isomorphic(const SimplicialComplex& k,
                                                     const SimplicialComplex& l,
                                                     long long facet_budget) {
  if (static_cast<long long>(k.facets.size()) > facet_budget ||
      static_cast<long long>(l.facets.size()) > facet_budget)
    throw budget_error("complexes_isomorphic: facet budget exceeded");
  if (k.ground != l.ground || k.facets.size() != l.facets.size()) return std::nullopt;

  auto incidence = [](const SimplicialComplex& c) {
    int n = c.ground + static_cast<int>(c.facets.size());
    std::vector<std::pair<int, int>> edges;
    for (std::size_t fi = 0; fi < c.facets.size(); ++fi)
      for (int v : c.facets[fi]) edges.emplace_back(v, c.ground + static_cast<int>(fi));
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    for (int v = c.ground; v < n; ++v) colors[static_cast<std::size_t>(v)] = 1;
    return std::make_pair(Graph(n, std::move(edges)), std::move(colors));
  };

  auto [gk, ck] = incidence(k);
  auto [gl, cl] = incidence(l);
  auto witness = are_isomorphic_colored(gk, ck, gl, cl);
  if (!witness) return std::nullopt;

  std::vector<int> vertex_map(static_cast<std::size_t>(k.ground));
  for (int v = 0; v < k.ground; ++v) vertex_map[static_cast<std::size_t>(v)] = (*witness)(v);

  // Re-verify: every facet of k must map onto a facet of l, bijectively.
  std::set<std::vector<int>> l_facets(l.facets.begin(), l.facets.end());
  std::set<std::vector<int>> images;
  for (const auto& f : k.facets) {
    std::vector<int> img;
    img.reserve(f.size());
    for (int v : f) img.push_back(vertex_map[static_cast<std::size_t>(v)]);
    std::sort(img.begin(), img.end());
    if (!l_facets.count(img))
      throw std::logic_error("complexes_isomorphic: witness does not carry facets to facets");
    images.insert(img);
  }
  if (images.size() != l_facets.size())
    throw std::logic_error("complexes_isomorphic: facet image set is not bijective");
  return vertex_map;
}

long long euler_characteristic(const SimplicialComplex& k, long long budget) {
  long long chi = 0;
  for (int d = 0; d <= k.dimension(); ++d) {
    long long count = static_cast<long long>(simplices_of_dimension(k, d, budget).size());
    chi += (d % 2 == 0) ? count : -count;
  }
  return chi;
}

}  // namespace kc
