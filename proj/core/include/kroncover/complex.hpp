#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kroncover/graph.hpp"

namespace kc {

/// Abstract simplicial complex given by its facets (inclusion-maximal
/// simplices). Facets are sorted vertex lists over ground set 0..ground-1;
/// no facet contains another, and every ground vertex lies in some facet.
struct SimplicialComplex {
  int ground = 0;
  std::vector<std::vector<int>> facets;

  SimplicialComplex() = default;
  SimplicialComplex(int ground_size, std::vector<std::vector<int>> facet_list);

  int dimension() const;  // -1 for the empty complex
};

/// Neighborhood complex N(G): simplices are the vertex sets with a common
/// neighbor, so the facets are the inclusion-maximal neighborhoods N(v).
/// Vertices with no neighbor do not appear. Rejects loopy graphs.
SimplicialComplex neighborhood_complex(const Graph& g);

inline constexpr long long kDefaultSimplexBudget = 200'000;

/// All simplices of dimension exactly d (as sorted vertex lists, colex-ish
/// deduplicated order). Throws budget_error when the count would exceed the
/// budget.
std::vector<std::vector<int>> simplices_of_dimension(const SimplicialComplex& k, int d,
                                                     long long budget = kDefaultSimplexBudget);

/// Isomorphism witness between complexes (a ground-set bijection carrying
/// facets onto facets), or nullopt. Found via canonical forms of the
/// colored vertex-facet incidence graphs and re-verified facet by facet.
std::optional<std::vector<int>> complexes_isomorphic(const SimplicialComplex& k,
                                                     const SimplicialComplex& l,
                                                     long long facet_budget = 4096);

/// Alternating sum of simplex counts over all dimensions.
long long euler_characteristic(const SimplicialComplex& k,
                               long long budget = kDefaultSimplexBudget);

}  // namespace kc
