#include "kroncover/kneser.hpp"

#include <numeric>
#include <stdexcept>

#include "kroncover/subsets.hpp"

namespace kc {

FamilyIndex::FamilyIndex(int n_, int k_, int i_) : n(n_), k(k_), i(i_) {
  if (k < 1 || n < 2 * k) throw std::invalid_argument("FamilyIndex: need n >= 2k >= 2");
  if (i < 0 || 2 * i > n) throw std::invalid_argument("FamilyIndex: need 0 <= i <= n/2");
}

Permutation sigma_involution(int i, int n) {
  if (i < 0 || 2 * i > n) throw std::invalid_argument("sigma_involution: need 0 <= i <= n/2");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  for (int j = 0; j < i; ++j) std::swap(img[static_cast<std::size_t>(2 * j)], img[static_cast<std::size_t>(2 * j + 1)]);
  return Permutation(std::move(img));
}

Permutation subset_action(int n, int k, const Permutation& sigma) {
  if (sigma.degree() != n) throw std::invalid_argument("subset_action: degree mismatch");
  auto subsets = k_subsets(n, k);
  std::vector<int> img(subsets.size());
  for (std::size_t r = 0; r < subsets.size(); ++r)
    img[r] = static_cast<int>(colex_rank(apply_to_mask(sigma, subsets[r])));
  return Permutation(std::move(img));
}

Permutation tau_times_sigma(int n, int k, const Permutation& sigma) {
  Permutation on_subsets = subset_action(n, k, sigma);
  int count = on_subsets.degree();
  std::vector<int> img(static_cast<std::size_t>(2 * count));
  for (int v = 0; v < count; ++v) {
    img[static_cast<std::size_t>(v)] = count + on_subsets(v);
    img[static_cast<std::size_t>(count + v)] = on_subsets(v);
  }
  return Permutation(std::move(img));
}

KroneckerCover bipartite_kneser(int n, int k) {
  return kronecker_cover(kneser_graph(n, k));
}

Graph bipartite_kneser_subset_form(int n, int k) {
  if (k < 1 || n <= 2 * k)
    throw std::invalid_argument("bipartite_kneser_subset_form: need n > 2k >= 2");
  auto small = k_subsets(n, k);
  auto large = k_subsets(n, n - k);
  int cs = static_cast<int>(small.size());
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < cs; ++u)
    for (int v = 0; v < static_cast<int>(large.size()); ++v)
      if ((small[static_cast<std::size_t>(u)] & ~large[static_cast<std::size_t>(v)]) == 0)
        edges.emplace_back(u, cs + v);
  std::vector<std::string> labels;
  for (auto s : small) labels.push_back(set_notation(s));
  for (auto s : large) labels.push_back(set_notation(s));
  return Graph(cs + static_cast<int>(large.size()), std::move(edges), std::move(labels));
}

GraphMap subset_form_iso(int n, int k) {
  KroneckerCover cover = bipartite_kneser(n, k);
  Graph subset_form = bipartite_kneser_subset_form(n, k);
  int count = static_cast<int>(binomial(n, k));
  std::uint32_t full = n == 32 ? 0xffffffffu : ((1u << n) - 1);
  std::vector<int> assignment(static_cast<std::size_t>(2 * count));
  for (int r = 0; r < count; ++r) {
    assignment[static_cast<std::size_t>(r)] = r;  // (1,s) -> s
    std::uint32_t complement = full & ~colex_unrank(k, static_cast<std::uint64_t>(r));
    assignment[static_cast<std::size_t>(count + r)] =
        count + static_cast<int>(colex_rank(complement));  // (2,s) -> [n] \ s
  }
  GraphMap iso(cover.bigraph.graph, std::move(subset_form), std::move(assignment));
  if (!iso.is_isomorphism())
    throw std::logic_error("subset_form_iso: map failed to be an isomorphism");
  return iso;
}

Graph g_graph(int n, int k, int i) {
  FamilyIndex idx(n, k, i);
  KroneckerCover cover = bipartite_kneser(n, k);
  Permutation sigma = sigma_involution(i, n);
  OddInvolution alpha = odd_involution(cover.bigraph, tau_times_sigma(n, k, sigma));
  Quotient q = quotient(cover.bigraph, alpha);
  // Orbit of rank r is {(1,s_r), (2,sigma s_r)}, so orbit ids coincide with
  // the colex ranks of the layer-1 subsets.
  auto subsets = k_subsets(n, k);
  std::vector<std::string> labels;
  labels.reserve(subsets.size());
  for (auto s : subsets)
    labels.push_back("{" + set_notation(s) + " | " + set_notation(apply_to_mask(sigma, s)) + "}");
  return with_labels(q.graph, std::move(labels));
}

std::vector<bool> simplicity_threshold(int n, int k) {
  FamilyIndex idx(n, k, 0);
  KroneckerCover cover = bipartite_kneser(n, k);
  std::vector<bool> table;
  for (int i = 0; 2 * i <= n; ++i) {
    OddInvolution alpha =
        odd_involution(cover.bigraph, tau_times_sigma(n, k, sigma_involution(i, n)));
    table.push_back(quotient_is_simple(cover.bigraph, alpha));
  }
  return table;
}

std::vector<int> new_layer_vertices(int n, int k, int i) {
  if (k < 1 || n <= 2 * k) throw std::invalid_argument("new_layer_vertices: need n > 2k >= 2");
  if (i < 0 || 2 * i >= n)
    throw std::invalid_argument("new_layer_vertices: sigma_i must fix n");
  std::vector<int> out;
  auto subsets = k_subsets(n, k);
  for (std::size_t r = 0; r < subsets.size(); ++r)
    if (subsets[r] & (1u << (n - 1))) out.push_back(static_cast<int>(r));
  return out;
}

}  // namespace kc
