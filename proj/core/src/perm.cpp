#include "kroncover/perm.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace kc {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("Permutation: images are not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int x = 0; x < degree(); ++x) inv[static_cast<std::size_t>(img_[static_cast<std::size_t>(x)])] = x;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if ((*this)(x) != x) return false;
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> img(static_cast<std::size_t>(a.degree()));
  for (int x = 0; x < a.degree(); ++x) img[static_cast<std::size_t>(x)] = a(b(x));
  return Permutation(std::move(img));
}

std::uint32_t apply_to_mask(const Permutation& p, std::uint32_t mask) {
  std::uint32_t out = 0;
  while (mask) {
    int e = std::countr_zero(mask);
    out |= (1u << p(e));
    mask &= mask - 1;
  }
  return out;
}

std::string cycle_notation(const Permutation& p) {
  std::string s;
  std::vector<char> seen(static_cast<std::size_t>(p.degree()), 0);
  for (int x = 0; x < p.degree(); ++x) {
    if (seen[static_cast<std::size_t>(x)] || p(x) == x) continue;
    s += '(';
    int y = x;
    bool first = true;
    do {
      seen[static_cast<std::size_t>(y)] = 1;
      if (!first) s += ',';
      s += std::to_string(y + 1);
      first = false;
      y = p(y);
    } while (y != x);
    s += ')';
  }
  if (s.empty()) s = "()";
  return s;
}

Permutation parse_cycle_notation(int degree, const std::string& s) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) { ++i; continue; }
    if (s[i] != '(') throw std::invalid_argument("parse_cycle_notation: expected '('");
    ++i;
    std::vector<int> cycle;
    while (i < s.size() && s[i] != ')') {
      if (s[i] == ',' || std::isspace(static_cast<unsigned char>(s[i]))) { ++i; continue; }
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw std::invalid_argument("parse_cycle_notation: expected digit");
      int v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        ++i;
      }
      if (v < 1 || v > degree) throw std::invalid_argument("parse_cycle_notation: point out of range");
      cycle.push_back(v - 1);
    }
    if (i >= s.size()) throw std::invalid_argument("parse_cycle_notation: unterminated cycle");
    ++i;  // ')'
    for (std::size_t j = 0; j < cycle.size(); ++j)
      img[static_cast<std::size_t>(cycle[j])] = cycle[(j + 1) % cycle.size()];
  }
  return Permutation(std::move(img));
}

bool is_involution(const Permutation& p) {
  for (int x = 0; x < p.degree(); ++x)
    if (p(p(x)) != x) return false;
  return true;
}

int involution_class_index(const Permutation& p) {
  if (!is_involution(p))
    throw std::invalid_argument("involution_class_index: not an involution");
  int t = 0;
  for (int x = 0; x < p.degree(); ++x)
    if (p(x) > x) ++t;
  return t;
}

}  // namespace kc
