#include "kroncover/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

#include "kroncover/subsets.hpp"

namespace kc {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
    throw std::invalid_argument("Graph: labels not in bijection with vertices");
  words_ = (n + 63) / 64;
  adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(words_), 0);
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("Graph: edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adj_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v / 64)] |= 1ull << (v % 64);
    adj_[static_cast<std::size_t>(v) * words_ + static_cast<std::size_t>(u / 64)] |= 1ull << (u % 64);
  }
}

bool Graph::adjacent(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("Graph::adjacent: vertex out of range");
  return (adj_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v / 64)] >> (v % 64)) & 1ull;
}

bool Graph::is_simple() const {
  for (int v = 0; v < n_; ++v)
    if (has_loop(v)) return false;
  return true;
}

int Graph::degree(int v) const {
  int d = 0;
  for (std::uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  auto r = row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t word = r[static_cast<std::size_t>(w)];
    while (word) {
      out.push_back(w * 64 + std::countr_zero(word));
      word &= word - 1;
    }
  }
  return out;
}

std::span<const std::uint64_t> Graph::row(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("Graph::row: vertex out of range");
  return {adj_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
}

Graph with_labels(const Graph& g, std::vector<std::string> labels) {
  return Graph(g.vertex_count(), g.edges(), std::move(labels));
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph: n must be positive");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph kneser_graph(int n, int k) {
  if (k <= 0 || n < 2 * k) throw std::invalid_argument("kneser_graph: need n >= 2k >= 2");
  auto subsets = k_subsets(n, k);
  int count = static_cast<int>(subsets.size());
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < count; ++u)
    for (int v = u + 1; v < count; ++v)
      if ((subsets[static_cast<std::size_t>(u)] & subsets[static_cast<std::size_t>(v)]) == 0)
        edges.emplace_back(u, v);
  std::vector<std::string> labels;
  labels.reserve(subsets.size());
  for (auto s : subsets) labels.push_back(set_notation(s));
  return Graph(count, std::move(edges), std::move(labels));
}

namespace {

std::string label_or_id(const Graph& g, int v) {
  return g.has_labels() ? g.labels()[static_cast<std::size_t>(v)] : std::to_string(v);
}

}  // namespace

Graph categorical_product(const Graph& g, const Graph& h) {
  int ng = g.vertex_count(), nh = h.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (const auto& [gu, gv] : g.edges())
    for (const auto& [hu, hv] : h.edges()) {
      edges.emplace_back(gu * nh + hu, gv * nh + hv);
      if (gu != gv || hu != hv) edges.emplace_back(gu * nh + hv, gv * nh + hu);
    }
  std::vector<std::string> labels;
  if (g.has_labels() || h.has_labels()) {
    labels.reserve(static_cast<std::size_t>(ng) * static_cast<std::size_t>(nh));
    for (int u = 0; u < ng; ++u)
      for (int w = 0; w < nh; ++w)
        labels.push_back("(" + label_or_id(g, u) + ", " + label_or_id(h, w) + ")");
  }
  return Graph(ng * nh, std::move(edges), std::move(labels));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  int ng = g.vertex_count(), nh = h.vertex_count();
  std::vector<std::pair<int, int>> edges = g.edges();
  for (const auto& [u, v] : h.edges()) edges.emplace_back(ng + u, ng + v);
  std::vector<std::string> labels;
  if (g.has_labels() || h.has_labels()) {
    for (int v = 0; v < ng; ++v) labels.push_back(label_or_id(g, v));
    for (int v = 0; v < nh; ++v) labels.push_back(label_or_id(h, v));
  }
  return Graph(ng + nh, std::move(edges), std::move(labels));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> newid(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("induced_subgraph: vertex out of range");
    if (newid[static_cast<std::size_t>(v)] != -1)
      throw std::invalid_argument("induced_subgraph: duplicate vertex");
    newid[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges()) {
    int nu = newid[static_cast<std::size_t>(u)], nv = newid[static_cast<std::size_t>(v)];
    if (nu >= 0 && nv >= 0) edges.emplace_back(nu, nv);
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(vertices.size());
    for (int v : vertices) labels.push_back(g.labels()[static_cast<std::size_t>(v)]);
  }
  return Graph(static_cast<int>(vertices.size()), std::move(edges), std::move(labels));
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

std::optional<std::vector<int>> is_bipartite_with_parts(const Graph& g) {
  std::vector<int> part(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int root = 0; root < g.vertex_count(); ++root) {
    if (part[static_cast<std::size_t>(root)] != 0) continue;
    part[static_cast<std::size_t>(root)] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u)) {
        if (v == u) return std::nullopt;  // loop
        int& pv = part[static_cast<std::size_t>(v)];
        if (pv == 0) {
          pv = 3 - part[static_cast<std::size_t>(u)];
          queue.push_back(v);
        } else if (pv == part[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  return part;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  dist[static_cast<std::size_t>(src)] = 0;
  std::deque<int> queue{src};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.neighbors(u))
      if (v != u && dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

}  // namespace kc
