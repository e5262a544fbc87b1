#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kc {

/// Binomial coefficient C(n, k). Cached table, exact up to n = 64.
std::uint64_t binomial(int n, int k);

// k-subsets of {0,...,n-1} are encoded as bitmasks and ordered
// colexicographically. Colex ranks do not depend on n, so the subsets
// avoiding the top element occupy a prefix of the ordering; the family
// constructions rely on that prefix property for their induction steps.

/// Colex rank of a subset mask among all subsets of its cardinality.
std::uint64_t colex_rank(std::uint32_t mask);

/// Inverse of colex_rank for k-element subsets.
std::uint32_t colex_unrank(int k, std::uint64_t rank);

/// All k-subsets of {0,...,n-1} in colex order.
std::vector<std::uint32_t> k_subsets(int n, int k);

/// Renders a mask as a 1-based set, e.g. "{1,3,5}".
std::string set_notation(std::uint32_t mask);

}  // namespace kc
