// kroncover: build the graphs G_i(n,k) whose Kronecker covers are the
// bipartite Kneser graph H(n,k), and machine-check the classification,
// automorphism-group and chromatic-number facts about them.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kroncover/bigraph.hpp"
#include "kroncover/canonical.hpp"
#include "kroncover/coloring.hpp"
#include "kroncover/complex.hpp"
#include "kroncover/errors.hpp"
#include "kroncover/homology.hpp"
#include "kroncover/io.hpp"
#include "kroncover/kneser.hpp"
#include "kroncover/reports.hpp"
#include "kroncover/subsets.hpp"

namespace {

struct GlobalOptions {
  std::string out;
  std::string cache_dir;
  kc::Budgets budgets;
};

void write_output(const GlobalOptions& opts, const std::string& text) {
  if (opts.out.empty() || opts.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(opts.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + opts.out);
  file << text;
}

kc::Graph build_family_graph(const std::string& family, int n, int k,
                             std::optional<int> i) {
  if (family == "kneser") return kc::kneser_graph(n, k);
  if (family == "bipartite") return kc::bipartite_kneser(n, k).bigraph.graph;
  if (family == "g") {
    if (!i) throw CLI::ValidationError("build", "family 'g' requires the index i");
    return kc::g_graph(n, k, *i);
  }
  throw CLI::ValidationError("build", "unknown family: " + family);
}

int run_build(const GlobalOptions& opts, const std::string& family, int n, int k,
              std::optional<int> i, const std::string& format) {
  if (format == "json") {
    if (family == "bipartite") {
      write_output(opts, kc::bigraph_to_json(kc::bipartite_kneser(n, k).bigraph) + "\n");
      return 0;
    }
    write_output(opts, kc::graph_to_json(build_family_graph(family, n, k, i)) + "\n");
    return 0;
  }
  kc::Graph g = build_family_graph(family, n, k, i);
  if (format == "dot") {
    write_output(opts, kc::graph_to_dot(g));
    return 0;
  }
  if (format == "dimacs") {
    write_output(opts, kc::graph_to_dimacs(g));
    return 0;
  }
  throw CLI::ValidationError("build", "unknown format: " + format);
}

int run_classify(const GlobalOptions& opts, int n, int k, bool exhaustive) {
  std::ostringstream out;
  kc::CanonicalCache cache(opts.cache_dir);
  auto table = kc::simplicity_threshold(n, k);
  out << "classification of quotients of H(" << n << "," << k << ")\n";
  out << "i  simple  |V|  |E|  certificate\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    kc::Graph gi = kc::g_graph(n, k, static_cast<int>(i));
    out << i << "  " << (table[i] ? "yes" : "no ") << "     " << gi.vertex_count() << "   "
        << gi.edge_count() << "   ";
    if (table[i]) {
      auto form = cache.canonical(gi, opts.budgets.canonical_vertices,
                                  opts.budgets.canonical_nodes);
      out << kc::CanonicalCache::digest(kc::Graph(gi.vertex_count(), form.certificate_edges));
    } else {
      out << "(loops)";
    }
    out << "\n";
  }
  int simple = 0;
  for (bool b : table) simple += b ? 1 : 0;
  out << "simple quotients: " << simple << " (expected k = " << k << ")\n";

  if (exhaustive) {
    kc::KroneckerCover h = kc::bipartite_kneser(n, k);
    auto aut = cache.automorphisms(h.bigraph.graph, opts.budgets.canonical_vertices,
                                   opts.budgets.canonical_nodes);
    auto invs =
        kc::enumerate_odd_involutions(h.bigraph, aut, opts.budgets.group_elements);
    std::vector<kc::OddInvolution> classes;
    for (int i = 0; 2 * i <= n; ++i)
      classes.push_back(kc::odd_involution(
          h.bigraph, kc::tau_times_sigma(n, k, kc::sigma_involution(i, n))));
    std::vector<int> histogram(classes.size(), 0);
    int unmatched = 0;
    for (const auto& alpha : invs) {
      bool matched = false;
      for (std::size_t i = 0; i < classes.size(); ++i)
        if (kc::are_evenly_conjugate(h.bigraph, alpha, classes[i], aut,
                                     opts.budgets.group_elements)) {
          ++histogram[i];
          matched = true;
          break;
        }
      if (!matched) ++unmatched;
    }
    out << "odd involutions: " << invs.size() << "\n";
    for (std::size_t i = 0; i < histogram.size(); ++i)
      out << "  class tau x sigma_" << i << ": " << histogram[i] << " members\n";
    if (unmatched) out << "  UNMATCHED: " << unmatched << "\n";
    out << "even-conjugacy classes: " << histogram.size() << "\n";
  }
  write_output(opts, out.str());
  return 0;
}

int run_aut(const GlobalOptions& opts, int n, int k, int i) {
  kc::CanonicalCache cache(opts.cache_dir);
  kc::Graph gi = kc::g_graph(n, k, i);
  auto aut = cache.automorphisms(gi, opts.budgets.canonical_vertices,
                                 opts.budgets.canonical_nodes);
  std::uint64_t formula = 1;
  for (int j = 2; j <= i; ++j) formula *= static_cast<std::uint64_t>(j);
  formula <<= i;
  for (int j = 2; j <= n - 2 * i; ++j) formula *= static_cast<std::uint64_t>(j);
  std::ostringstream out;
  out << "Aut(G_" << i << "(" << n << "," << k << "))\n";
  out << "computed order: " << aut.order() << "\n";
  out << "formula 2^i * i! * (n-2i)!: " << formula << "\n";
  out << "structure: (Z_2^" << i << " : S_" << i << ") x S_" << n - 2 * i << "\n";
  out << "generators:\n";
  for (const auto& g : aut.generators()) out << "  " << kc::cycle_notation(g) << "\n";
  out << "verdict: " << (aut.order() == formula ? "pass" : "fail") << "\n";
  write_output(opts, out.str());
  return aut.order() == formula ? 0 : 1;
}

int run_chroma(const GlobalOptions& opts, int n, int k, int i, const std::string& mode) {
  std::ostringstream out;
  int expected = n - 2 * k + 2;
  kc::Graph gi = kc::g_graph(n, k, i);
  out << "chromatic number of G_" << i << "(" << n << "," << k << "), expected " << expected
      << "\n";
  bool ok = true;
  if (mode == "exact" || mode == "both") {
    auto result = kc::chromatic_number_exact(gi, expected, opts.budgets.coloring_nodes);
    if (result.exact) {
      out << "exact: " << result.value() << " (" << result.nodes << " nodes)\n";
      ok = ok && result.value() == expected;
    } else {
      out << "exact: inconclusive, bounds [" << result.lower << "," << result.upper << "]\n";
    }
  }
  if (mode == "constructive" || mode == "both") {
    kc::Coloring col = kc::theorem3_coloring(n, k, i);
    bool proper = kc::is_proper(gi, col);
    out << "constructive: " << col.palette << " colors, " << (proper ? "proper" : "IMPROPER")
        << "\n";
    out << kc::coloring_to_sol(col);
    ok = ok && proper && col.palette == expected;
  }
  out << "verdict: " << (ok ? "pass" : "fail") << "\n";
  write_output(opts, out.str());
  return ok ? 0 : 1;
}

int run_ncomplex(const GlobalOptions& opts, int n, int k, int i, int depth) {
  std::ostringstream out;
  kc::Graph gi = kc::g_graph(n, k, i);
  kc::SimplicialComplex ni = kc::neighborhood_complex(gi);
  kc::SimplicialComplex reference = kc::neighborhood_complex(kc::kneser_graph(n, k));
  out << "neighborhood complex of G_" << i << "(" << n << "," << k << ")\n";
  out << "ground " << ni.ground << ", facets " << ni.facets.size() << ", dim "
      << ni.dimension() << "\n";
  auto witness = kc::complexes_isomorphic(ni, reference);
  out << "isomorphic to N(K(" << n << "," << k << ")): " << (witness ? "yes" : "NO") << "\n";
  auto hom = kc::reduced_homology(ni, depth, opts.budgets.simplices);
  out << kc::homology_to_json(hom) << "\n";
  bool vanish = true;
  int m = n - 2 * k - 1;
  for (int d = 0; d <= std::min(depth, m); ++d)
    vanish = vanish && hom.dims[static_cast<std::size_t>(d)].betti == 0 &&
             hom.dims[static_cast<std::size_t>(d)].torsion.empty();
  int certified = vanish ? std::min(depth, m) : -1;
  out << "lovasz bound from certified level " << certified << ": chi >= "
      << kc::lovasz_bound(certified) << "\n";
  write_output(opts, out.str());
  return witness ? 0 : 1;
}

int run_verify_all(const GlobalOptions& opts, int max_n, int max_k, const std::string& only,
                   int jobs, bool with_walltime) {
  kc::VerifyOptions vopts;
  vopts.budgets = opts.budgets;
  vopts.only = only;
  vopts.jobs = jobs;
  vopts.cache_dir = opts.cache_dir;
  if (max_n > 0) vopts.grid = kc::rectangular_grid(max_n, max_k);
  auto reports = kc::run_claims(vopts);
  std::ostringstream out;
  for (const auto& r : reports) out << kc::report_to_json_line(r, with_walltime) << "\n";
  int fails = 0, inconclusive = 0;
  for (const auto& r : reports) {
    if (r.verdict == "fail") ++fails;
    if (r.verdict == "inconclusive") ++inconclusive;
  }
  std::ostringstream summary;
  summary << "# " << reports.size() << " reports, " << fails << " fail, " << inconclusive
          << " inconclusive\n";
  out << summary.str();
  write_output(opts, out.str());
  return fails == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphs with Kronecker cover H(n,k): construction and verification"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--out", global.out, "output file (default: stdout)");
  app.add_option("--cache-dir", global.cache_dir,
                 "canonical-form cache directory (default: $KRONCOVER_CACHE_DIR)");
  app.add_option("--budget-vertices", global.budgets.canonical_vertices,
                 "canonical search vertex budget");
  app.add_option("--budget-canon-nodes", global.budgets.canonical_nodes,
                 "canonical search node budget");
  app.add_option("--budget-color-nodes", global.budgets.coloring_nodes,
                 "chromatic search node budget");
  app.add_option("--budget-simplices", global.budgets.simplices, "simplex enumeration budget");
  app.add_option("--budget-tietze", global.budgets.tietze, "Tietze simplification budget");
  app.add_option("--budget-group", global.budgets.group_elements,
                 "group element enumeration budget");

  std::string family, format = "json", mode = "both", only;
  int n = 0, k = 0, depth = 0, jobs = 1, max_n = 0, max_k = 0;
  std::optional<int> opt_i;
  int i = 0;
  bool exhaustive = false, no_walltime = false;

  auto* build = app.add_subcommand("build", "construct a family graph and write it out");
  build->add_option("family", family, "kneser | bipartite | g")->required();
  build->add_option("n", n)->required();
  build->add_option("k", k)->required();
  build->add_option("i", opt_i, "family index (required for family 'g')");
  build->add_option("--format", format, "json | dot | dimacs");

  auto* classify = app.add_subcommand("classify", "simplicity table for all sigma_i classes");
  classify->add_option("n", n)->required();
  classify->add_option("k", k)->required();
  classify->add_flag("--exhaustive", exhaustive,
                     "enumerate all odd involutions and match them to classes");

  auto* aut = app.add_subcommand("aut", "automorphism group of G_i(n,k) vs the formula");
  aut->add_option("n", n)->required();
  aut->add_option("k", k)->required();
  aut->add_option("i", i)->required();

  auto* chroma = app.add_subcommand("chroma", "chromatic number of G_i(n,k)");
  chroma->add_option("n", n)->required();
  chroma->add_option("k", k)->required();
  chroma->add_option("i", i)->required();
  chroma->add_option("--mode", mode, "exact | constructive | both");

  auto* ncomplex = app.add_subcommand("ncomplex", "neighborhood complex report for G_i(n,k)");
  ncomplex->add_option("n", n)->required();
  ncomplex->add_option("k", k)->required();
  ncomplex->add_option("i", i)->required();
  ncomplex->add_option("--depth", depth, "homology computed in dimensions 0..depth");

  auto* verify = app.add_subcommand("verify-all", "run the claim registry (JSON lines)");
  verify->add_option("--grid", [&max_n, &max_k](const std::vector<std::string>& vals) {
    if (vals.size() != 2) return false;
    max_n = std::stoi(vals[0]);
    max_k = std::stoi(vals[1]);
    return true;
  }, "max_n max_k (default: the pinned verification grid)")->expected(2);
  verify->add_option("--only", only, "claim-id prefix filter");
  verify->add_option("--jobs", jobs, "concurrent claims");
  verify->add_flag("--no-walltime", no_walltime, "omit wall_ms for byte-stable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return run_build(global, family, n, k, opt_i, format);
    if (classify->parsed()) return run_classify(global, n, k, exhaustive);
    if (aut->parsed()) return run_aut(global, n, k, i);
    if (chroma->parsed()) return run_chroma(global, n, k, i, mode);
    if (ncomplex->parsed()) return run_ncomplex(global, n, k, i, depth);
    if (verify->parsed()) return run_verify_all(global, max_n, max_k, only, jobs, !no_walltime);
  } catch (const kc::budget_error& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
