#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "kroncover/canonical.hpp"
#include "kroncover/graph.hpp"
#include "kroncover/io.hpp"
#include "kroncover/kneser.hpp"
#include "kroncover/subsets.hpp"
#include "oracles.hpp"

using namespace kc;

TEST_CASE("colex ranking round-trips and orders prefixes first") {
  CHECK(colex_rank(0b011) == 0);  // {1,2}
  CHECK(colex_rank(0b101) == 1);  // {1,3}
  CHECK(colex_unrank(2, 3) == 0b1001);
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      auto subsets = k_subsets(n, k);
      for (std::size_t r = 0; r < subsets.size(); ++r) {
        CHECK(colex_rank(subsets[r]) == r);
        CHECK(colex_unrank(k, r) == subsets[r]);
      }
      // subsets avoiding n form the exact rank prefix
      for (std::size_t r = 0; r < subsets.size(); ++r)
        CHECK(((subsets[r] >> (n - 1)) & 1u) == (r >= binomial(n - 1, k) ? 1u : 0u));
    }
  CHECK(set_notation(0b10101) == "{1,3,5}");
  CHECK(set_notation(0) == "{}");
}

TEST_CASE("complete graphs") {
  CHECK(complete_graph(1).vertex_count() == 1);
  CHECK(complete_graph(1).edge_count() == 0);
  CHECK(complete_graph(4).edge_count() == 6);
  CHECK_THROWS_AS(complete_graph(0), std::invalid_argument);
  // K(n,1) is the complete graph, with matching vertex ids
  CHECK(kneser_graph(5, 1).edges() == complete_graph(5).edges());
}

TEST_CASE("kneser graph construction") {
  Graph petersen = kneser_graph(5, 2);
  CHECK(petersen.vertex_count() == 10);
  CHECK(petersen.edge_count() == oracle::kneser_edge_count(5, 2));
  CHECK(petersen.edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(petersen.degree(v) == 3);

  Graph matching = kneser_graph(4, 2);
  CHECK(matching.edge_count() == 3);
  for (int v = 0; v < 6; ++v) CHECK(matching.degree(v) == 1);

  CHECK_THROWS_AS(kneser_graph(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(kneser_graph(3, 2), std::invalid_argument);

  for (auto [n, k] : {std::pair{6, 2}, {7, 3}, {8, 3}})
    CHECK(kneser_graph(n, k).edge_count() == oracle::kneser_edge_count(n, k));
}

TEST_CASE("kneser graphs have constant degree C(n-k,k)") {
  for (auto [n, k] : {std::pair{5, 2}, {6, 2}, {7, 2}, {7, 3}, {8, 3}}) {
    auto ds = degree_sequence(kneser_graph(n, k));
    CHECK(ds.front() == ds.back());
    CHECK(ds.front() == static_cast<int>(binomial(n - k, k)));
  }
}

TEST_CASE("categorical product") {
  Graph c6 = categorical_product(complete_graph(2), complete_graph(3));
  CHECK(c6.vertex_count() == 6);
  CHECK(c6.edge_count() == 6);
  for (int v = 0; v < 6; ++v) CHECK(c6.degree(v) == 2);
  CHECK(is_connected(c6));
  CHECK(is_bipartite_with_parts(c6).has_value());

  Graph point(1);
  Graph g = oracle::random_graph(7, 0.5, 11);
  CHECK(categorical_product(g, point).edge_count() == 0);
  CHECK(categorical_product(g, point).vertex_count() == 7);

  Graph k2k4 = categorical_product(complete_graph(2), complete_graph(4));
  CHECK(k2k4.vertex_count() == 8);
  CHECK(k2k4.edge_count() == 12);
  CHECK(is_bipartite_with_parts(k2k4).has_value());

  // doubling law for loop-free graphs
  for (unsigned seed = 0; seed < 6; ++seed) {
    Graph r = oracle::random_graph(9, 0.4, seed);
    Graph cover = categorical_product(complete_graph(2), r);
    CHECK(cover.vertex_count() == 2 * r.vertex_count());
    CHECK(cover.edge_count() == 2 * r.edge_count());
  }
}

TEST_CASE("categorical product is commutative and associative up to isomorphism") {
  Graph a = complete_graph(3);
  Graph b = oracle::random_graph(4, 0.6, 3);
  Graph c = complete_graph(2);
  CHECK(are_isomorphic(categorical_product(a, b), categorical_product(b, a)).has_value());
  CHECK(are_isomorphic(categorical_product(categorical_product(a, b), c),
                       categorical_product(a, categorical_product(b, c)))
            .has_value());
}

TEST_CASE("disjoint union") {
  Graph two_points = disjoint_union(complete_graph(1), complete_graph(1));
  CHECK(two_points.vertex_count() == 2);
  CHECK(two_points.edge_count() == 0);
  Graph two_k4 = disjoint_union(complete_graph(4), complete_graph(4));
  CHECK(two_k4.vertex_count() == 8);
  CHECK(two_k4.edge_count() == 12);
  CHECK(!is_connected(two_k4));
}

TEST_CASE("induced subgraphs") {
  Graph g = g_graph(5, 2, 1);
  std::vector<int> all(10);
  for (int v = 0; v < 10; ++v) all[static_cast<std::size_t>(v)] = v;
  CHECK(induced_subgraph(g, all) == g);
  CHECK(induced_subgraph(g, {}).vertex_count() == 0);
  CHECK_THROWS_AS(induced_subgraph(g, {0, 99}), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph(g, {0, 0}), std::invalid_argument);

  // restriction to subsets avoiding the top element reproduces the family
  // member one step down
  std::vector<int> prefix(static_cast<std::size_t>(binomial(4, 2)));
  for (std::size_t r = 0; r < prefix.size(); ++r) prefix[r] = static_cast<int>(r);
  Graph restricted = induced_subgraph(g, prefix);
  Graph smaller = g_graph(4, 2, 1);
  CHECK(restricted.edges() == smaller.edges());
  CHECK(are_isomorphic(restricted, smaller).has_value());
}

TEST_CASE("degree sequences") {
  auto k4 = degree_sequence(complete_graph(4));
  CHECK(k4 == std::vector<int>{3, 3, 3, 3});
  auto g0 = degree_sequence(g_graph(7, 3, 0));
  auto g1 = degree_sequence(g_graph(7, 3, 1));
  auto g2 = degree_sequence(g_graph(7, 3, 2));
  CHECK(g0 == g1);
  CHECK(g1 == g2);
  // loops contribute one
  Graph loopy(2, {{0, 0}, {0, 1}});
  CHECK(degree_sequence(loopy) == std::vector<int>{1, 2});
}

TEST_CASE("bipartition detection is deterministic") {
  Graph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  auto parts = is_bipartite_with_parts(c6);
  REQUIRE(parts.has_value());
  for (int v = 0; v < 6; ++v) CHECK((*parts)[static_cast<std::size_t>(v)] == v % 2 + 1);

  CHECK(!is_bipartite_with_parts(complete_graph(3)).has_value());
  Graph loopy(1, {{0, 0}});
  CHECK(!is_bipartite_with_parts(loopy).has_value());

  Graph h = bipartite_kneser(5, 2).bigraph.graph;
  auto hp = is_bipartite_with_parts(h);
  REQUIRE(hp.has_value());
  for (int v = 0; v < h.vertex_count(); ++v)
    CHECK((*hp)[static_cast<std::size_t>(v)] == (v < 10 ? 1 : 2));
}

TEST_CASE("graph json round trip") {
  for (unsigned seed = 0; seed < 4; ++seed) {
    Graph g = oracle::random_graph(8, 0.5, seed);
    CHECK(graph_from_json(graph_to_json(g)) == g);
  }
  Graph labeled = kneser_graph(5, 2);
  CHECK(graph_from_json(graph_to_json(labeled)) == labeled);
  // deterministic bytes
  CHECK(graph_to_json(labeled) == graph_to_json(kneser_graph(5, 2)));
}

TEST_CASE("dimacs export and import") {
  Graph g = kneser_graph(5, 2);
  std::string text = graph_to_dimacs(g);
  CHECK(text.substr(0, 13) == "p edge 10 15\n");
  Graph back = graph_from_dimacs(text);
  CHECK(back.edges() == g.edges());
  Graph loopy(1, {{0, 0}});
  CHECK_THROWS_AS(graph_to_dimacs(loopy), std::invalid_argument);
}

TEST_CASE("dot export carries labels") {
  std::string dot = graph_to_dot(g_graph(5, 2, 1));
  CHECK(dot.find("graph G {") == 0);
  CHECK(dot.find("{{1,2} | {2,1}}") == std::string::npos);  // canonical set order
  CHECK(dot.find("{{1,2} | {1,2}}") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);
}
