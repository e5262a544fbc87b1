#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kroncover/graph.hpp"
#include "kroncover/perm.hpp"
#include "kroncover/perm_group.hpp"

namespace kc {

/// Result of a canonical labeling search. Certificates of two graphs (with
/// the same vertex count and color histogram) are equal iff the graphs are
/// isomorphic; this is decided by the backtracking search itself, not by
/// any hash.
struct CanonicalForm {
  Permutation labeling;  // original vertex -> canonical position
  std::vector<std::pair<int, int>> certificate_edges;  // relabeled, sorted, loops included
  std::vector<int> color_histogram;  // canonical color per position (empty if uncolored)
  std::vector<Permutation> generators;  // generate Aut(G) (color-preserving)
  long long nodes = 0;
};

inline constexpr int kDefaultCanonicalVertexBudget = 256;
inline constexpr long long kDefaultCanonicalNodeBudget = 2'000'000;

/// Canonical form by iterated equitable refinement plus backtracking with
/// first-smallest target cells. `colors` fixes an initial partition
/// (vertices may only map to vertices of equal color). Throws budget_error
/// when |V| exceeds `vertex_budget` or the search tree exceeds the node
/// budget.
CanonicalForm canonical_form(const Graph& g, const std::vector<int>& colors = {},
                             int vertex_budget = kDefaultCanonicalVertexBudget,
                             long long node_budget = kDefaultCanonicalNodeBudget);

/// Isomorphism witness (or nullopt), via canonical forms. The witness is
/// re-verified edge-by-edge before it is returned.
std::optional<Permutation> are_isomorphic(const Graph& g, const Graph& h,
                                          int vertex_budget = kDefaultCanonicalVertexBudget,
                                          long long node_budget = kDefaultCanonicalNodeBudget);

/// As a GraphMap-style check with explicit colors; colors must match under
/// the witness.
std::optional<Permutation> are_isomorphic_colored(const Graph& g, const std::vector<int>& gc,
                                                  const Graph& h, const std::vector<int>& hc,
                                                  int vertex_budget = kDefaultCanonicalVertexBudget,
                                                  long long node_budget = kDefaultCanonicalNodeBudget);

/// Automorphism group from the generators discovered during the canonical
/// search.
PermutationGroup automorphism_group(const Graph& g,
                                    int vertex_budget = kDefaultCanonicalVertexBudget,
                                    long long node_budget = kDefaultCanonicalNodeBudget);

/// The monomorphism Z_2 x Aut(G) -> Aut(K_2 x G), (i,f) |-> i x f, together
/// with the order comparison deciding whether it is onto.
struct StarMonomorphismReport {
  std::uint64_t aut_base_order = 0;   // |Aut(G)|
  std::uint64_t aut_cover_order = 0;  // |Aut(K_2 x G)|
  bool surjective = false;            // 2*|Aut(G)| == |Aut(K_2 x G)|
  std::vector<Permutation> image_generators;  // images of (tau, id) and (id, gen)
};
StarMonomorphismReport star_monomorphism(const Graph& g,
                                         int vertex_budget = kDefaultCanonicalVertexBudget,
                                         long long node_budget = kDefaultCanonicalNodeBudget);

}  // namespace kc
