#include "kroncover/io.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace kc {

namespace {

using nlohmann::json;

json graph_json_object(const Graph& g) {
  json j;
  j["n"] = g.vertex_count();
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  j["edges"] = std::move(edges);
  if (g.has_labels()) j["labels"] = g.labels();
  return j;
}

Graph graph_from_json_object(const json& j) {
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return Graph(n, std::move(edges), std::move(labels));
}

}  // namespace

std::string graph_to_json(const Graph& g) { return graph_json_object(g).dump(); }

Graph graph_from_json(const std::string& text) {
  return graph_from_json_object(json::parse(text));
}

std::string bigraph_to_json(const Bigraph& b) {
  json j = graph_json_object(b.graph);
  j["parity"] = b.parity;
  return j.dump();
}

Bigraph bigraph_from_json(const std::string& text) {
  json j = json::parse(text);
  return Bigraph(graph_from_json_object(j), j.at("parity").get<std::vector<int>>());
}

std::string graph_to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  v" << v;
    if (g.has_labels()) out << " [label=\"" << g.labels()[static_cast<std::size_t>(v)] << "\"]";
    out << ";\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string graph_to_dimacs(const Graph& g) {
  if (!g.is_simple())
    throw std::invalid_argument("graph_to_dimacs: DIMACS .col cannot carry loops");
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << "e " << (u + 1) << " " << (v + 1) << "\n";
  return out.str();
}

Graph graph_from_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      std::string kind;
      int m = 0;
      ls >> kind >> n >> m;
      if (kind != "edge" && kind != "col")
        throw std::invalid_argument("graph_from_dimacs: unsupported problem line");
    } else if (tag == "e") {
      int u = 0, v = 0;
      ls >> u >> v;
      edges.emplace_back(u - 1, v - 1);
    }
  }
  if (n < 0) throw std::invalid_argument("graph_from_dimacs: missing problem line");
  return Graph(n, std::move(edges));
}

std::string coloring_to_sol(const Coloring& c) {
  std::ostringstream out;
  out << "s " << c.palette << "\n";
  for (std::size_t v = 0; v < c.assignment.size(); ++v)
    out << "v " << (v + 1) << " " << (c.assignment[v] + 1) << "\n";
  return out.str();
}

Coloring coloring_from_sol(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Coloring c;
  std::vector<std::pair<int, int>> entries;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "s") {
      ls >> c.palette;
    } else if (tag == "v") {
      int v = 0, col = 0;
      ls >> v >> col;
      entries.emplace_back(v - 1, col - 1);
    }
  }
  int n = 0;
  for (const auto& [v, col] : entries) n = std::max(n, v + 1);
  c.assignment.assign(static_cast<std::size_t>(n), -1);
  for (const auto& [v, col] : entries) c.assignment[static_cast<std::size_t>(v)] = col;
  return c;
}

std::string coloring_to_json(const Coloring& c) {
  json j;
  j["palette"] = c.palette;
  j["assignment"] = c.assignment;
  return j.dump();
}

std::string complex_to_json(const SimplicialComplex& k) {
  json j;
  json vertices = json::array();
  for (int v = 0; v < k.ground; ++v) vertices.push_back(v);
  j["vertices"] = std::move(vertices);
  j["facets"] = k.facets;
  return j.dump();
}

SimplicialComplex complex_from_json(const std::string& text) {
  json j = json::parse(text);
  return SimplicialComplex(static_cast<int>(j.at("vertices").size()),
                           j.at("facets").get<std::vector<std::vector<int>>>());
}

std::string homology_to_json(const HomologyReport& report) {
  json dims = json::array();
  for (std::size_t d = 0; d < report.dims.size(); ++d) {
    json entry;
    entry["dim"] = d;
    entry["betti"] = report.dims[d].betti;
    entry["torsion"] = report.dims[d].torsion;
    dims.push_back(std::move(entry));
  }
  json j;
  j["dims"] = std::move(dims);
  return j.dump();
}

std::string permutation_to_json(const Permutation& p) {
  return json(p.images()).dump();
}

}  // namespace kc
