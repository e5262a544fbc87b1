#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "kroncover/perm.hpp"

namespace kc {

/// Permutation group given by generators. Order, membership and element
/// enumeration go through a deterministic Schreier-Sims stabilizer chain,
/// so two runs over the same generator list agree element-for-element.
class PermutationGroup {
 public:
  explicit PermutationGroup(int degree);  // trivial group
  PermutationGroup(int degree, std::vector<Permutation> generators);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  std::uint64_t order() const { return order_; }
  bool contains(const Permutation& p) const;

  /// Visits every element exactly once in a fixed order. The identity is
  /// always visited.
  void for_each_element(const std::function<void(const Permutation&)>& visit) const;
  std::vector<Permutation> elements(std::uint64_t budget = 10'000'000) const;

  /// Orbit partition of the natural action, as a representative map.
  std::vector<int> point_orbits() const;

 private:
  struct Level {
    int beta = -1;
    std::vector<int> orbit;           // points, in discovery order
    std::vector<int> slot;            // point -> index into orbit, or -1
    std::vector<Permutation> transversal;  // parallel to orbit: maps beta to point
    std::vector<Permutation> gens;    // strong generators fixing all earlier betas
  };

  void build();
  bool strip(const Permutation& p, std::size_t from, Permutation* residue, std::size_t* stop) const;
  void rebuild_orbit(std::size_t lvl);
  void enumerate_rec(std::size_t lvl, const Permutation& prefix,
                     const std::function<void(const Permutation&)>& visit) const;

  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

/// Exact order of the group generated by `gens` on `degree` points.
std::uint64_t group_order(int degree, const std::vector<Permutation>& gens);

/// Subgroup of the elements satisfying `pred` (which must be closed under
/// products and inverses), found by full enumeration. Throws budget_error
/// if the ambient group has more than `enumeration_budget` elements.
PermutationGroup subgroup_where(const PermutationGroup& g,
                                const std::function<bool(const Permutation&)>& pred,
                                std::uint64_t enumeration_budget = 10'000'000);

/// Centralizer Z_{S_n}(sigma). Brute force over S_n for n <= 10; for larger
/// degrees sigma must be an involution, and the group is assembled from the
/// block generators of the centralizer of the matched transposition pattern.
PermutationGroup centralizer_in_symmetric(int n, const Permutation& sigma);

/// The product eps_1^{x_1} ... eps_m^{x_m} * sigma~ in S_{2m}, where
/// eps_i = (i, m+i) and sigma~ acts diagonally on both blocks. Its image,
/// over all arguments, is the centralizer of tau = (1,m+1)...(m,2m).
Permutation phi_embedding(const std::vector<int>& bits, const Permutation& sigma);

}  // namespace kc
