#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kc {

/// Finite graph: a symmetric adjacency relation on vertices 0..n-1, loops
/// allowed. Instances are immutable after construction and safe to share
/// across threads.
///
/// Adjacency is stored twice: as the sorted edge list (u <= v, lexicographic),
/// which is the canonical serialization, and as per-vertex bit rows for the
/// set-intersection heavy search cores. A loop shows up as the self bit.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, std::vector<std::pair<int, int>> edges = {},
                 std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool adjacent(int u, int v) const;
  bool has_loop(int v) const { return adjacent(v, v); }
  bool is_simple() const;
  int degree(int v) const;  // a loop contributes 1
  std::vector<int> neighbors(int v) const;

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }

  /// Bit row of v, words_per_row() words, self bit set for a loop.
  std::span<const std::uint64_t> row(int v) const;
  int words_per_row() const { return words_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::string> labels_;
};

/// Same structure, different per-vertex annotations.
Graph with_labels(const Graph& g, std::vector<std::string> labels);

Graph complete_graph(int n);

/// K(n,k): k-subsets of [n] in colex order, adjacent iff disjoint.
/// Accepts n = 2k (a perfect matching), which the coloring induction uses
/// as its base case.
Graph kneser_graph(int n, int k);

/// Vertex set V(G) x V(H), (v,w) ~ (v',w') iff v ~ v' and w ~ w'.
/// Vertex (v,w) gets id v*|V(H)| + w.
Graph categorical_product(const Graph& g, const Graph& h);

Graph disjoint_union(const Graph& g, const Graph& h);

/// Subgraph induced on `vertices`; new ids follow the given order, labels
/// carried over. Passing 0..n-1 reproduces the graph exactly.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// Sorted (ascending) multiset of degrees; loops count 1.
std::vector<int> degree_sequence(const Graph& g);

/// A proper 2-coloring with values {1,2}, or nullopt if none exists.
/// Deterministic: BFS from the lowest-id vertex of each component, roots
/// colored 1.
std::optional<std::vector<int>> is_bipartite_with_parts(const Graph& g);

/// BFS distances from src; unreachable vertices get -1. Loops are ignored.
std::vector<int> bfs_distances(const Graph& g, int src);

bool is_connected(const Graph& g);

}  // namespace kc
