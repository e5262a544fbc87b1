#pragma once

#include <array>
#include <optional>
#include <vector>

#include "kroncover/canonical.hpp"
#include "kroncover/graph.hpp"
#include "kroncover/perm.hpp"
#include "kroncover/perm_group.hpp"

namespace kc {

/// A graph together with a proper 2-coloring ("parity") with values {1,2}.
/// The parity being proper forces the graph to be loop-free and bipartite.
struct Bigraph {
  Graph graph;
  std::vector<int> parity;

  Bigraph(Graph g, std::vector<int> p);
};

/// A total vertex map checked to be a graph homomorphism at construction.
class GraphMap {
 public:
  GraphMap(Graph source, Graph target, std::vector<int> assignment);

  const Graph& source() const { return source_; }
  const Graph& target() const { return target_; }
  const std::vector<int>& assignment() const { return assignment_; }
  int operator()(int v) const { return assignment_[static_cast<std::size_t>(v)]; }
  bool is_isomorphism() const;

 private:
  Graph source_, target_;
  std::vector<int> assignment_;
};

enum class MapParity { even, odd, neither };

/// even iff parity is preserved everywhere, odd iff flipped everywhere.
MapParity parity_of_map(const Bigraph& x, const Bigraph& y, const std::vector<int>& assignment);

/// An automorphism alpha with alpha^2 = id that flips parity everywhere.
/// Such maps are automatically fixed-point-free. Construct via
/// odd_involution(), which validates all three properties.
struct OddInvolution {
  Permutation perm;
};

OddInvolution odd_involution(const Bigraph& x, Permutation p);
bool is_odd_involution(const Bigraph& x, const Permutation& p);

/// The Kronecker cover K_2 x G with parity (i,v) -> i+1 and the canonical
/// layer swap (1,v) <-> (2,v). Vertex (i,v) has id i*|V(G)| + v.
struct KroneckerCover {
  Bigraph bigraph;
  OddInvolution layer_swap;
};
KroneckerCover kronecker_cover(const Graph& g);

/// Quotient X/alpha: vertices are the alpha-orbits {x, alpha(x)}, two orbits
/// adjacent iff some cross pair is adjacent in X; an orbit carries a loop
/// exactly when x ~ alpha(x). Orbit ids follow the smaller member's vertex
/// id, which fixes the serialization.
struct Quotient {
  Graph graph;
  GraphMap projection;                 // X -> graph
  std::vector<int> orbit_of;           // per vertex of X
  std::vector<std::array<int, 2>> orbit_members;  // orbit id -> {min member, its image}
};

Quotient quotient(const Bigraph& x, const OddInvolution& alpha);
bool quotient_is_simple(const Bigraph& x, const OddInvolution& alpha);

/// The even isomorphism x -> (parity(x), orbit(x)) from X onto
/// K_2 x (X/alpha); verified before returning.
GraphMap canonical_cover_iso(const Bigraph& x, const OddInvolution& alpha);

/// Unique descent of f: X -> Y with f∘alpha = beta∘f to X/alpha -> Y/beta.
GraphMap descend_map(const GraphMap& f, const Bigraph& x, const OddInvolution& alpha,
                     const Bigraph& y, const OddInvolution& beta);

/// Unique even lift X -> Y of fbar: X/alpha -> Y/beta.
GraphMap lift_map(const GraphMap& fbar, const Bigraph& x, const OddInvolution& alpha,
                  const Bigraph& y, const OddInvolution& beta);

inline constexpr std::uint64_t kDefaultGroupEnumerationBudget = 10'000'000;

/// Even automorphism f with f∘alpha = beta∘f, or nullopt. Deterministic:
/// the witness least in image lexicographic order is returned.
std::optional<Permutation> are_evenly_conjugate(
    const Bigraph& x, const OddInvolution& alpha, const OddInvolution& beta,
    const PermutationGroup& aut, std::uint64_t budget = kDefaultGroupEnumerationBudget);

/// Any automorphism witness (not necessarily even), least in lex order.
std::optional<Permutation> are_conjugate(const Bigraph& x, const OddInvolution& alpha,
                                         const OddInvolution& beta, const PermutationGroup& aut,
                                         std::uint64_t budget = kDefaultGroupEnumerationBudget);

/// All odd involutions of X, deduplicated, sorted by image array.
std::vector<OddInvolution> enumerate_odd_involutions(
    const Bigraph& x, const PermutationGroup& aut,
    std::uint64_t budget = kDefaultGroupEnumerationBudget);

/// Subgroup of even automorphisms commuting with alpha.
PermutationGroup even_centralizer(const Bigraph& x, const OddInvolution& alpha,
                                  const PermutationGroup& aut,
                                  std::uint64_t budget = kDefaultGroupEnumerationBudget);

/// Splits an odd involution of K_2 x G as tau x alpha'. Throws when alpha is
/// not of product form.
struct OddInvolutionFactors {
  Permutation factor;  // alpha' on V(G)
};
OddInvolutionFactors decompose_odd_involution(const Graph& base, const Permutation& alpha);

}  // namespace kc
