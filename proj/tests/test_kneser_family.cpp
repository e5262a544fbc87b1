#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kroncover/bigraph.hpp"
#include "kroncover/canonical.hpp"
#include "kroncover/graph.hpp"
#include "kroncover/kneser.hpp"
#include "kroncover/subsets.hpp"
#include "oracles.hpp"

using namespace kc;

TEST_CASE("sigma involutions") {
  CHECK(sigma_involution(0, 5).is_identity());
  CHECK(sigma_involution(2, 5).images() == std::vector<int>{1, 0, 3, 2, 4});
  CHECK(sigma_involution(2, 5)(4) == 4);  // fixes the top element
  CHECK(compose(sigma_involution(1, 4), sigma_involution(1, 4)).is_identity());
  CHECK_THROWS_AS(sigma_involution(3, 5), std::invalid_argument);
  CHECK_THROWS_AS(sigma_involution(-1, 5), std::invalid_argument);
}

TEST_CASE("family index validation") {
  CHECK_NOTHROW(FamilyIndex(4, 2, 2));
  CHECK_THROWS_AS(FamilyIndex(3, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(FamilyIndex(5, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(FamilyIndex(5, 0, 0), std::invalid_argument);
}

TEST_CASE("bipartite Kneser graphs") {
  KroneckerCover h52 = bipartite_kneser(5, 2);
  CHECK(h52.bigraph.graph.vertex_count() == 20);
  CHECK(h52.bigraph.graph.edge_count() == 30);

  for (int k = 2; k <= 3; ++k) {
    Graph h = bipartite_kneser(2 * k + 1, k).bigraph.graph;
    for (int v = 0; v < h.vertex_count(); ++v) CHECK(h.degree(v) == k + 1);
  }

  Graph h62 = bipartite_kneser(6, 2).bigraph.graph;
  CHECK(h62.vertex_count() == 30);
  CHECK(h62.edge_count() == 2 * oracle::kneser_edge_count(6, 2));
  CHECK(h62.edge_count() == 90);
}

TEST_CASE("subset form of H(n,k)") {
  Graph subset = bipartite_kneser_subset_form(5, 2);
  CHECK(subset.vertex_count() == 20);
  CHECK(subset.edge_count() == 30);
  // {1,2} is adjacent to exactly the three 3-sets containing it
  auto nb = subset.neighbors(0);
  CHECK(nb.size() == 3);
  for (int w : nb) {
    std::uint32_t mask = colex_unrank(3, static_cast<std::uint64_t>(w) - 10);
    CHECK((0b11u & ~mask) == 0);
  }
  CHECK(are_isomorphic(subset, bipartite_kneser(5, 2).bigraph.graph).has_value());

  Graph h51 = bipartite_kneser_subset_form(5, 1);
  CHECK(h51.vertex_count() == 10);
  for (int v = 0; v < 10; ++v) CHECK(h51.degree(v) == 4);

  CHECK_THROWS_AS(bipartite_kneser_subset_form(4, 2), std::invalid_argument);
}

TEST_CASE("the explicit iso between the two forms of H(n,k)") {
  GraphMap iso = subset_form_iso(5, 2);
  CHECK(iso.is_isomorphism());
  CHECK(iso(0) == 0);  // (1,{1,2}) -> {1,2}
  // (2,{1,2}) -> {3,4,5}
  std::uint32_t complement = 0b11100;
  CHECK(iso(10) == 10 + static_cast<int>(colex_rank(complement)));
}

TEST_CASE("g_graph structure") {
  CHECK(g_graph(5, 2, 0).edges() == kneser_graph(5, 2).edges());

  Graph g1 = g_graph(5, 2, 1);
  CHECK(g1.vertex_count() == 10);
  CHECK(g1.is_simple());
  CHECK(!are_isomorphic(g1, kneser_graph(5, 2)).has_value());

  CHECK(!g_graph(5, 2, 2).is_simple());

  // twisted-adjacency oracle: orbit(s) ~ orbit(t) iff s and sigma_i(t) are
  // disjoint
  for (auto [n, k, i] : {std::tuple{5, 2, 1}, {6, 2, 1}, {7, 3, 2}}) {
    Graph gi = g_graph(n, k, i);
    Permutation sigma = sigma_involution(i, n);
    auto subsets = k_subsets(n, k);
    for (std::size_t s = 0; s < subsets.size(); ++s)
      for (std::size_t t = 0; t < subsets.size(); ++t) {
        bool expected = (subsets[s] & apply_to_mask(sigma, subsets[t])) == 0;
        CHECK(gi.adjacent(static_cast<int>(s), static_cast<int>(t)) == expected);
      }
  }
}

TEST_CASE("simplicity thresholds") {
  CHECK(simplicity_threshold(5, 2) == std::vector<bool>{true, true, false});
  CHECK(simplicity_threshold(7, 3) == std::vector<bool>{true, true, true, false});
  CHECK(simplicity_threshold(6, 2) == std::vector<bool>{true, true, false, false});
}

TEST_CASE("new layer vertices") {
  auto nl = new_layer_vertices(5, 2, 1);
  CHECK(nl.size() == 4);
  Graph g1 = g_graph(5, 2, 1);
  Permutation sigma = sigma_involution(1, 5);
  for (int v : nl) {
    std::uint32_t s = colex_unrank(2, static_cast<std::uint64_t>(v));
    CHECK(((s >> 4) & 1u) == 1u);                        // contains 5
    CHECK(((apply_to_mask(sigma, s) >> 4) & 1u) == 1u);  // so does its partner
  }
  for (std::size_t a = 0; a < nl.size(); ++a)
    for (std::size_t b = a + 1; b < nl.size(); ++b)
      CHECK(!g1.adjacent(nl[a], nl[b]));  // independent set

  // exactly the complement of the colex prefix
  CHECK(nl.front() == static_cast<int>(binomial(4, 2)));
  CHECK(nl.back() == static_cast<int>(binomial(5, 2)) - 1);
  CHECK_THROWS_AS(new_layer_vertices(4, 2, 1), std::invalid_argument);
}

TEST_CASE("colex embedding makes the family chain induced") {
  for (auto [n, k, i] : {std::tuple{5, 2, 1}, {6, 2, 1}, {7, 3, 2}}) {
    Graph big = g_graph(n, k, i);
    std::vector<int> prefix(static_cast<std::size_t>(binomial(n - 1, k)));
    for (std::size_t r = 0; r < prefix.size(); ++r) prefix[r] = static_cast<int>(r);
    CHECK(induced_subgraph(big, prefix).edges() == g_graph(n - 1, k, i).edges());
  }
}

TEST_CASE("cover identity for small members") {
  for (auto [n, k] : {std::pair{5, 2}, {6, 2}}) {
    KroneckerCover h = bipartite_kneser(n, k);
    for (int i = 0; i < k; ++i) {
      OddInvolution alpha =
          odd_involution(h.bigraph, tau_times_sigma(n, k, sigma_involution(i, n)));
      GraphMap iso = canonical_cover_iso(h.bigraph, alpha);
      CHECK(iso.is_isomorphism());
      CHECK(are_isomorphic(kronecker_cover(g_graph(n, k, i)).bigraph.graph,
                           h.bigraph.graph)
                .has_value());
    }
  }
}

TEST_CASE("degree sequences agree across the family") {
  for (auto [n, k] : {std::pair{5, 2}, {7, 3}}) {
    auto reference = degree_sequence(kneser_graph(n, k));
    for (int i = 0; i < k; ++i) CHECK(degree_sequence(g_graph(n, k, i)) == reference);
  }
}
