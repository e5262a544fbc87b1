#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "kroncover/cache.hpp"
#include "kroncover/graph.hpp"
#include "kroncover/io.hpp"
#include "kroncover/kneser.hpp"
#include "kroncover/reports.hpp"
#include "oracles.hpp"

using namespace kc;

TEST_CASE("registry covers the acceptance claims") {
  auto ids = all_claim_ids();
  for (const char* required :
       {"thm1.simplicity", "thm1.cover", "thm1.distinct", "thm1.exhaustive", "thm2.order",
        "thm2.centralizer", "thm2.phi", "mirafzal.order", "remark1.star_not_iso", "prop7.equiv",
        "prop8.centralizer", "thm3.chi", "thm3.coloring", "intro.counterexample", "lem3_3.iso",
        "thm3_2.homology", "thm3_2.pi1", "remark_k1.unique", "lem5_6.unique"})
    CHECK(std::find(ids.begin(), ids.end(), required) != ids.end());
}

TEST_CASE("grids") {
  auto grid = default_grid();
  CHECK(grid.size() == 5);
  auto rect = rectangular_grid(7, 3);
  CHECK(rect == std::vector<std::pair<int, int>>{{5, 2}, {6, 2}, {7, 2}, {7, 3}});
}

TEST_CASE("report json lines are deterministic modulo wall time") {
  VerifyOptions opts;
  opts.grid = {{5, 2}};
  opts.only = "thm1.simplicity";
  auto first = run_claims(opts);
  auto second = run_claims(opts);
  REQUIRE(first.size() == second.size());
  REQUIRE(!first.empty());
  for (std::size_t i = 0; i < first.size(); ++i)
    CHECK(report_to_json_line(first[i], false) == report_to_json_line(second[i], false));
  CHECK(first[0].verdict == "pass");
}

TEST_CASE("claim filter and parallel execution agree") {
  VerifyOptions opts;
  opts.grid = {{5, 2}};
  opts.only = "thm1";
  auto serial = run_claims(opts);
  opts.jobs = 3;
  auto parallel = run_claims(opts);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i)
    CHECK(report_to_json_line(serial[i], false) == report_to_json_line(parallel[i], false));
  for (const auto& r : serial) CHECK(r.claim.rfind("thm1", 0) == 0);
}

TEST_CASE("canonical cache: cold and warm runs agree") {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "kroncover-cache-test";
  std::filesystem::remove_all(dir);
  Graph petersen = kneser_graph(5, 2);
  std::vector<std::pair<int, int>> cold_cert, warm_cert;
  {
    CanonicalCache cache(dir.string());
    cold_cert = cache.canonical(petersen).certificate_edges;
    CHECK(cache.automorphisms(petersen).order() == 120);
  }
  {
    CanonicalCache cache(dir.string());  // fresh instance reads from disk
    warm_cert = cache.canonical(petersen).certificate_edges;
    CHECK(cache.automorphisms(petersen).order() == 120);
  }
  CHECK(cold_cert == warm_cert);
  CHECK(std::filesystem::exists(dir));

  // corrupted entries are ignored, not trusted
  {
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      std::ofstream out(entry.path());
      out << "{not json";
    }
    CanonicalCache cache(dir.string());
    CHECK(cache.canonical(petersen).certificate_edges == cold_cert);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("verdicts are identical with a cleared and a warm cache") {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "kroncover-verdict-cache-test";
  std::filesystem::remove_all(dir);
  VerifyOptions opts;
  opts.grid = {{5, 2}};
  opts.only = "thm1";
  opts.cache_dir = dir.string();
  auto cold = run_claims(opts);   // populates the cache
  auto warm = run_claims(opts);   // replays from it
  REQUIRE(cold.size() == warm.size());
  for (std::size_t i = 0; i < cold.size(); ++i)
    CHECK(report_to_json_line(cold[i], false) == report_to_json_line(warm[i], false));
  std::filesystem::remove_all(dir);
}

TEST_CASE("digest separates graphs and ignores labels") {
  Graph a = kneser_graph(5, 2);
  Graph b = g_graph(5, 2, 1);
  CHECK(CanonicalCache::digest(a) != CanonicalCache::digest(b));
  CHECK(CanonicalCache::digest(a) == CanonicalCache::digest(with_labels(a, {})));
}

TEST_CASE("bigraph json round trip") {
  Bigraph h = bipartite_kneser(5, 2).bigraph;
  Bigraph back = bigraph_from_json(bigraph_to_json(h));
  CHECK(back.graph == h.graph);
  CHECK(back.parity == h.parity);
}

TEST_CASE("permutation and homology json") {
  CHECK(permutation_to_json(Permutation::identity(3)) == "[0,1,2]");
  HomologyReport hom;
  hom.dims.push_back({0, {}});
  hom.dims.push_back({1, {2}});
  std::string j = homology_to_json(hom);
  CHECK(j.find("\"betti\":1") != std::string::npos);
  CHECK(j.find("\"torsion\":[2]") != std::string::npos);
}
