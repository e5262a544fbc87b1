#pragma once

#include <optional>
#include <vector>

#include "kroncover/graph.hpp"

namespace kc {

struct Coloring {
  std::vector<int> assignment;  // vertex -> color in 0..palette-1
  int palette = 0;

  int colors_used() const;
};

/// True iff no edge (loops included) is monochromatic and every assigned
/// color fits the palette. A loop makes every coloring improper.
bool is_proper(const Graph& g, const Coloring& c);

inline constexpr long long kDefaultColoringNodeBudget = 50'000'000;

/// Exact chromatic number by branch and bound: DSATUR greedy upper bound,
/// greedy clique lower bound, then a saturation-ordered decision search per
/// candidate palette with forced-move propagation and new-colors-in-order
/// symmetry breaking. Loopy graphs are rejected. When the node budget runs
/// out, `exact` is false and lower/upper carry the best proven bounds.
struct ChromaticResult {
  int lower = 0;
  int upper = 0;
  bool exact = false;
  Coloring witness;
  long long nodes = 0;

  int value() const;  // throws budget_error unless exact
};

ChromaticResult chromatic_number_exact(const Graph& g,
                                       std::optional<int> upper_hint = std::nullopt,
                                       long long node_budget = kDefaultColoringNodeBudget);

/// The inductive (n-2k+2)-coloring of G_i(n,k): the base G_i(2k,k) is a
/// perfect matching and gets 2 colors; each step up in n gives the vertices
/// whose representative subset contains n one fresh color. Requires i < k.
Coloring theorem3_coloring(int n, int k, int i);

/// Chromatic lower bound m + 3 from a certified connectivity level m of the
/// neighborhood complex (m = -1 encodes mere nonemptiness).
int lovasz_bound(int m_certified);

}  // namespace kc
