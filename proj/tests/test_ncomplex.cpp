#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "kroncover/complex.hpp"
#include "kroncover/errors.hpp"
#include "kroncover/graph.hpp"
#include "kroncover/homology.hpp"
#include "kroncover/io.hpp"
#include "kroncover/kneser.hpp"
#include "oracles.hpp"

using namespace kc;

namespace {

SimplicialComplex hollow_triangle() {
  return SimplicialComplex(3, {{0, 1}, {1, 2}, {0, 2}});
}

SimplicialComplex solid_triangle() { return SimplicialComplex(3, {{0, 1, 2}}); }

// minimal 6-vertex triangulation of the real projective plane (antipodal
// quotient of the icosahedron): 10 facets, every pair of vertices an edge
SimplicialComplex projective_plane() {
  return SimplicialComplex(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                               {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

}  // namespace

TEST_CASE("complex invariants are validated") {
  CHECK_THROWS_AS(SimplicialComplex(3, {{0, 1}, {0, 1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(SimplicialComplex(3, {{0, 1}}), std::invalid_argument);  // vertex 2 orphaned
  CHECK_THROWS_AS(SimplicialComplex(2, {{0, 5}}), std::invalid_argument);
  CHECK(hollow_triangle().dimension() == 1);
  CHECK(solid_triangle().dimension() == 2);
}

TEST_CASE("neighborhood complexes of tiny graphs") {
  SimplicialComplex n_k2 = neighborhood_complex(complete_graph(2));
  CHECK(n_k2.ground == 2);
  CHECK(n_k2.facets == std::vector<std::vector<int>>{{0}, {1}});

  SimplicialComplex n_k3 = neighborhood_complex(complete_graph(3));
  CHECK(n_k3.facets == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});

  CHECK_THROWS_AS(neighborhood_complex(Graph(1, {{0, 0}})), std::invalid_argument);

  // isolated vertices contribute nothing
  SimplicialComplex sparse = neighborhood_complex(Graph(3, {{0, 1}}));
  CHECK(sparse.ground == 2);
}

TEST_CASE("facets are exactly the maximal neighborhoods") {
  for (unsigned seed = 0; seed < 8; ++seed) {
    Graph g = oracle::random_graph(8, 0.45, seed);
    bool any_edge = g.edge_count() > 0;
    if (!any_edge) continue;
    SimplicialComplex complex = neighborhood_complex(g);
    // oracle: double loop over neighborhoods
    std::vector<std::vector<int>> hoods;
    std::vector<int> ids;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) > 0) hoods.push_back(g.neighbors(v));
    std::set<std::vector<int>> expected;
    for (const auto& a : hoods) {
      bool maximal = true;
      for (const auto& b : hoods)
        if (a != b && std::includes(b.begin(), b.end(), a.begin(), a.end())) maximal = false;
      if (maximal) expected.insert(a);
    }
    // compare after compacting ids the same way the library does
    std::set<int> present;
    for (const auto& f : expected)
      for (int v : f) present.insert(v);
    std::vector<int> newid(static_cast<std::size_t>(g.vertex_count()), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (present.count(v)) newid[static_cast<std::size_t>(v)] = next++;
    std::set<std::vector<int>> expected_compact;
    for (const auto& f : expected) {
      std::vector<int> g2;
      for (int v : f) g2.push_back(newid[static_cast<std::size_t>(v)]);
      expected_compact.insert(g2);
    }
    std::set<std::vector<int>> got(complex.facets.begin(), complex.facets.end());
    CHECK(got == expected_compact);
  }
}

TEST_CASE("simplex enumeration and Euler characteristics") {
  CHECK(euler_characteristic(hollow_triangle()) == 0);
  CHECK(euler_characteristic(solid_triangle()) == 1);
  CHECK(euler_characteristic(SimplicialComplex(1, {{0}})) == 1);
  CHECK(euler_characteristic(projective_plane()) == 1);
  CHECK(simplices_of_dimension(hollow_triangle(), 0).size() == 3);
  CHECK(simplices_of_dimension(hollow_triangle(), 1).size() == 3);
  CHECK(simplices_of_dimension(hollow_triangle(), 2).empty());
  CHECK_THROWS_AS(simplices_of_dimension(neighborhood_complex(kneser_graph(8, 3)), 3, 10),
                  budget_error);
}

TEST_CASE("reduced homology of model complexes") {
  HomologyReport circle = reduced_homology(hollow_triangle(), 1);
  CHECK(circle.dims[0].betti == 0);
  CHECK(circle.dims[1].betti == 1);
  CHECK(circle.dims[1].torsion.empty());

  HomologyReport disk = reduced_homology(solid_triangle(), 2);
  for (const auto& d : disk.dims) {
    CHECK(d.betti == 0);
    CHECK(d.torsion.empty());
  }

  HomologyReport point = reduced_homology(SimplicialComplex(1, {{0}}), 0);
  CHECK(point.dims[0].betti == 0);

  // boundary of the tetrahedron: a 2-sphere
  SimplicialComplex sphere(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  HomologyReport s2 = reduced_homology(sphere, 2);
  CHECK(s2.dims[0].betti == 0);
  CHECK(s2.dims[1].betti == 0);
  CHECK(s2.dims[2].betti == 1);

  // torsion shows up over the integers
  HomologyReport rp2 = reduced_homology(projective_plane(), 2);
  CHECK(rp2.dims[0].betti == 0);
  CHECK(rp2.dims[1].betti == 0);
  CHECK(rp2.dims[1].torsion == std::vector<long long>{2});
  CHECK(rp2.dims[2].betti == 0);
}

TEST_CASE("euler characteristic equals the alternating betti sum") {
  for (const SimplicialComplex& k :
       {hollow_triangle(), solid_triangle(), projective_plane(),
        neighborhood_complex(kneser_graph(5, 2))}) {
    int dim = k.dimension();
    HomologyReport hom = reduced_homology(k, dim);
    long long alt = 0;
    for (int d = 0; d <= dim; ++d)
      alt += (d % 2 == 0 ? 1 : -1) * hom.dims[static_cast<std::size_t>(d)].betti;
    CHECK(euler_characteristic(k) - 1 == alt);  // reduced: drop one from dim 0
  }
}

TEST_CASE("homology of the Kneser neighborhood complexes") {
  HomologyReport h52 = reduced_homology(neighborhood_complex(kneser_graph(5, 2)), 0);
  CHECK(h52.dims[0].betti == 0);
  HomologyReport h62 = reduced_homology(neighborhood_complex(kneser_graph(6, 2)), 1);
  CHECK(h62.dims[0].betti == 0);
  CHECK(h62.dims[1].betti == 0);
  CHECK(h62.dims[1].torsion.empty());
}

TEST_CASE("complex isomorphism") {
  SimplicialComplex tri = hollow_triangle();
  auto self = complexes_isomorphic(tri, tri);
  REQUIRE(self.has_value());

  SimplicialComplex points(3, {{0}, {1}, {2}});
  CHECK(!complexes_isomorphic(tri, points).has_value());

  auto witness = complexes_isomorphic(neighborhood_complex(kneser_graph(5, 2)),
                                      neighborhood_complex(g_graph(5, 2, 1)));
  CHECK(witness.has_value());
}

TEST_CASE("connectivity evidence tiers") {
  ConnectivityEvidence c0 = connectivity_evidence(neighborhood_complex(kneser_graph(5, 2)), 0);
  CHECK(c0.connected);
  CHECK(c0.verdict == "0-connected (proved)");

  ConnectivityEvidence c_fail = connectivity_evidence(hollow_triangle(), 1);
  CHECK(c_fail.connected);
  CHECK(!c_fail.homology_vanishes_to_m);
  CHECK(c_fail.verdict == "fails");

  ConnectivityEvidence disk = connectivity_evidence(solid_triangle(), 1);
  CHECK(disk.pi1 == ConnectivityEvidence::Pi1::verified);
  CHECK(disk.verdict == "1-connected (proved)");

  ConnectivityEvidence k62 = connectivity_evidence(neighborhood_complex(kneser_graph(6, 2)), 1);
  CHECK(k62.connected);
  CHECK(k62.homology_vanishes_to_m);
  CHECK(k62.pi1 != ConnectivityEvidence::Pi1::not_applicable);

  ConnectivityEvidence m2 = connectivity_evidence(solid_triangle(), 2);
  CHECK(m2.verdict == "consistent with 2-connected");  // never "proved" for m >= 2

  ConnectivityEvidence nonempty = connectivity_evidence(solid_triangle(), -1);
  CHECK(nonempty.verdict == "(-1)-connected (proved)");

  ConnectivityEvidence disconnected =
      connectivity_evidence(SimplicialComplex(2, {{0}, {1}}), 0);
  CHECK(!disconnected.connected);
  CHECK(disconnected.verdict == "fails");
}

TEST_CASE("complex json round trip") {
  SimplicialComplex k = neighborhood_complex(kneser_graph(5, 2));
  SimplicialComplex back = complex_from_json(complex_to_json(k));
  CHECK(back.ground == k.ground);
  CHECK(back.facets == k.facets);
}
