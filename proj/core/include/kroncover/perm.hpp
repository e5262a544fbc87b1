#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace kc {

/// A bijection of {0,...,n-1}. All internal indices are 0-based; the 1-based
/// cycle notation used by the I/O layer matches the usual [n] convention.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

/// compose(a, b) applies b first: (a*b)(x) = a(b(x)).
Permutation compose(const Permutation& a, const Permutation& b);

/// Image of a subset mask under p, elementwise.
std::uint32_t apply_to_mask(const Permutation& p, std::uint32_t mask);

/// 1-based disjoint-cycle string, fixed points omitted; identity is "()".
std::string cycle_notation(const Permutation& p);
Permutation parse_cycle_notation(int degree, const std::string& s);

/// True iff p∘p = id (the identity counts as an involution here).
bool is_involution(const Permutation& p);

/// Number of transpositions in the cycle decomposition of an involution.
int involution_class_index(const Permutation& p);

}  // namespace kc
