#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kroncover/coloring.hpp"
#include "kroncover/errors.hpp"
#include "kroncover/graph.hpp"
#include "kroncover/io.hpp"
#include "kroncover/kneser.hpp"
#include "oracles.hpp"

using namespace kc;

TEST_CASE("propriety checking") {
  Graph k2 = complete_graph(2);
  CHECK(is_proper(k2, Coloring{{0, 1}, 2}));
  CHECK(!is_proper(k2, Coloring{{0, 0}, 2}));
  CHECK(!is_proper(k2, Coloring{{0, 5}, 2}));  // out of palette
  Graph loopy(1, {{0, 0}});
  CHECK(!is_proper(loopy, Coloring{{0}, 1}));
  CHECK(is_proper(g_graph(5, 2, 1), theorem3_coloring(5, 2, 1)));
}

TEST_CASE("exact chromatic numbers on the small named instances") {
  CHECK(chromatic_number_exact(kneser_graph(5, 2)).value() == 3);
  CHECK(chromatic_number_exact(categorical_product(complete_graph(2), complete_graph(4)))
            .value() == 2);
  CHECK(chromatic_number_exact(disjoint_union(complete_graph(4), complete_graph(4))).value() ==
        4);
  CHECK(chromatic_number_exact(g_graph(7, 3, 2)).value() == 3);
  Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  CHECK(chromatic_number_exact(c5).value() == 3);
  CHECK(chromatic_number_exact(Graph(4)).value() == 1);
  CHECK(chromatic_number_exact(Graph(0)).value() == 0);
  CHECK_THROWS_AS(chromatic_number_exact(Graph(1, {{0, 0}})), std::invalid_argument);
}

TEST_CASE("solver agrees with brute force on random graphs") {
  for (unsigned seed = 0; seed < 30; ++seed) {
    Graph g = oracle::random_graph(9, 0.2 + 0.06 * (seed % 8), seed);
    ChromaticResult result = chromatic_number_exact(g);
    CHECK(result.exact);
    CHECK(result.value() == oracle::brute_force_chromatic(g));
    CHECK(is_proper(g, result.witness));
  }
}

TEST_CASE("solver closes instances whose clique bound is far from chi") {
  // Groetzsch graph: triangle-free with chi = 4, so refuting 3 colors takes
  // actual search rather than bound propagation.
  Graph groetzsch(11, {{0, 1},  {1, 2},  {2, 3},  {3, 4},  {0, 4},  {0, 6},  {0, 8},  {1, 7},
                       {1, 9},  {2, 5},  {2, 8},  {3, 6},  {3, 9},  {4, 5},  {4, 7},
                       {5, 10}, {6, 10}, {7, 10}, {8, 10}, {9, 10}});
  CHECK(chromatic_number_exact(groetzsch).value() == 4);
  CHECK(chromatic_number_exact(groetzsch).value() == oracle::brute_force_chromatic(groetzsch));

  // K(6,2): chi = 4 with maximum clique 3
  Graph k62 = kneser_graph(6, 2);
  CHECK(chromatic_number_exact(k62).value() == 4);
  CHECK(oracle::brute_force_chromatic(k62) == 4);
}

TEST_CASE("chromatic number is a relabeling invariant") {
  Graph petersen = kneser_graph(5, 2);
  for (unsigned seed = 1; seed <= 4; ++seed) {
    Graph shuffled = oracle::relabel(petersen, oracle::random_permutation(10, seed));
    CHECK(chromatic_number_exact(shuffled).value() == 3);
  }
}

TEST_CASE("chromatic monotonicity under induced subgraphs") {
  Graph g = g_graph(6, 2, 1);
  int chi = chromatic_number_exact(g).value();
  for (unsigned seed = 0; seed < 4; ++seed) {
    std::mt19937 rng(seed);
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (rng() % 2) keep.push_back(v);
    CHECK(chromatic_number_exact(induced_subgraph(g, keep)).value() <= chi);
  }
}

TEST_CASE("budget exhaustion degrades to bounds") {
  ChromaticResult result = chromatic_number_exact(kneser_graph(7, 2), std::nullopt, 3);
  CHECK(!result.exact);
  CHECK(result.lower >= 2);
  CHECK(result.upper >= result.lower);
  CHECK_THROWS_AS(result.value(), budget_error);
}

TEST_CASE("the inductive coloring") {
  CHECK(theorem3_coloring(4, 2, 1).palette == 2);
  CHECK(theorem3_coloring(4, 2, 1).colors_used() == 2);

  Coloring c521 = theorem3_coloring(5, 2, 1);
  CHECK(c521.palette == 3);
  CHECK(is_proper(g_graph(5, 2, 1), c521));

  Coloring c832 = theorem3_coloring(8, 3, 2);
  CHECK(c832.palette == 4);
  CHECK(c832.colors_used() == 4);
  CHECK(is_proper(g_graph(8, 3, 2), c832));

  CHECK_THROWS_AS(theorem3_coloring(5, 2, 2), std::invalid_argument);

  // the fresh color class is exactly the new layer, an independent set
  for (auto [n, k, i] : {std::tuple{5, 2, 1}, {7, 3, 2}}) {
    Coloring col = theorem3_coloring(n, k, i);
    auto fresh = new_layer_vertices(n, k, i);
    for (std::size_t v = 0; v < col.assignment.size(); ++v) {
      bool is_fresh = std::find(fresh.begin(), fresh.end(), static_cast<int>(v)) != fresh.end();
      CHECK((col.assignment[v] == col.palette - 1) == is_fresh);
    }
  }
}

TEST_CASE("sandwich: clique bound <= lovasz bound <= exact chi = palette") {
  for (auto [n, k, i] : {std::tuple{5, 2, 0}, {5, 2, 1}, {6, 2, 1}, {7, 3, 1}}) {
    Graph g = g_graph(n, k, i);
    int chi = chromatic_number_exact(g).value();
    int bound = lovasz_bound(n - 2 * k - 1);
    CHECK(bound <= chi);
    CHECK(chi == n - 2 * k + 2);
    CHECK(theorem3_coloring(n, k, i).palette == chi);
  }
}

TEST_CASE("lovasz bound arithmetic") {
  CHECK(lovasz_bound(0) == 3);
  CHECK(lovasz_bound(-1) == 2);
  CHECK(lovasz_bound(3) == 6);
  CHECK_THROWS_AS(lovasz_bound(-2), std::invalid_argument);
}

TEST_CASE("solution file round trip") {
  Coloring c = theorem3_coloring(5, 2, 1);
  Coloring back = coloring_from_sol(coloring_to_sol(c));
  CHECK(back.palette == c.palette);
  CHECK(back.assignment == c.assignment);
}
