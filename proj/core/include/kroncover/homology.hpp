#pragma once

#include <string>
#include <vector>

#include "kroncover/complex.hpp"

namespace kc {

/// Reduced integer homology in dimensions 0..d: Betti numbers plus torsion
/// coefficients (invariant factors > 1), computed from Smith normal forms
/// of the boundary matrices.
struct HomologyReport {
  struct Dimension {
    long long betti = 0;
    std::vector<long long> torsion;
  };
  std::vector<Dimension> dims;  // index = dimension
};

HomologyReport reduced_homology(const SimplicialComplex& k, int up_to_dim,
                                long long simplex_budget = kDefaultSimplexBudget);

/// Smith normal form statistics of an integer matrix (rows x cols, row-major).
/// Elimination runs in 64-bit with overflow checks and transparently redoes
/// the computation in arbitrary precision when a product would overflow.
struct SmithSummary {
  long long rank = 0;
  std::vector<long long> invariant_factors;  // nonzero diagonal, divisibility chain
};
SmithSummary smith_normal_form(std::vector<std::vector<long long>> matrix);

/// Graded evidence for m-connectivity of a complex:
///  * connected        — decided exactly (BFS on the 1-skeleton),
///  * homology_vanishes— reduced homology zero in dimensions 1..m,
///  * pi1              — for m >= 1, a bounded Tietze simplification of the
///    edge-path presentation; "verified" only if it reduces to the trivial
///    presentation within budget.
/// The verdict never claims more than "consistent with m-connected" unless
/// m <= 1 and every applicable check is decisive.
struct ConnectivityEvidence {
  bool nonempty = false;
  bool connected = false;
  bool homology_vanishes_to_m = false;
  enum class Pi1 { not_applicable, verified, inconclusive } pi1 = Pi1::not_applicable;
  std::string verdict;  // "fails", "consistent with m-connected", "m-connected (proved)"
};

ConnectivityEvidence connectivity_evidence(const SimplicialComplex& k, int m,
                                           long long simplex_budget = kDefaultSimplexBudget,
                                           long long tietze_budget = 2'000'000);

}  // namespace kc
