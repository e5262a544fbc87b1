#include "kroncover/subsets.hpp"

#include <bit>
#include <stdexcept>

namespace kc {

namespace {

constexpr int kMaxN = 64;

struct BinomialTable {
  std::uint64_t c[kMaxN + 1][kMaxN + 1] = {};
  BinomialTable() {
    for (int n = 0; n <= kMaxN; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k)
        c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
  }
};

const BinomialTable& table() {
  static const BinomialTable t;
  return t;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
  if (k > n) return 0;
  if (n > kMaxN) throw std::overflow_error("binomial: n > 64 not supported");
  return table().c[n][k];
}

std::uint64_t colex_rank(std::uint32_t mask) {
  std::uint64_t r = 0;
  int i = 1;
  while (mask) {
    int e = std::countr_zero(mask);
    r += binomial(e, i);
    ++i;
    mask &= mask - 1;
  }
  return r;
}

std::uint32_t colex_unrank(int k, std::uint64_t rank) {
  std::uint32_t mask = 0;
  for (int i = k; i >= 1; --i) {
    int e = i - 1;
    while (e + 1 <= 32 && binomial(e + 1, i) <= rank) ++e;
    mask |= (1u << e);
    rank -= binomial(e, i);
  }
  if (rank != 0) throw std::invalid_argument("colex_unrank: rank out of range");
  return mask;
}

std::vector<std::uint32_t> k_subsets(int n, int k) {
  if (k < 0 || n < 0 || k > n || n > 32)
    throw std::invalid_argument("k_subsets: bad (n,k)");
  std::vector<std::uint32_t> out;
  out.reserve(static_cast<std::size_t>(binomial(n, k)));
  for (std::uint64_t r = 0; r < binomial(n, k); ++r) out.push_back(colex_unrank(k, r));
  return out;
}

std::string set_notation(std::uint32_t mask) {
  std::string s = "{";
  bool first = true;
  while (mask) {
    int e = std::countr_zero(mask);
    if (!first) s += ',';
    s += std::to_string(e + 1);
    first = false;
    mask &= mask - 1;
  }
  s += '}';
  return s;
}

}  // namespace kc
