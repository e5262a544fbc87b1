#pragma once

#include <string>
#include <vector>

#include "kroncover/bigraph.hpp"
#include "kroncover/coloring.hpp"
#include "kroncover/complex.hpp"
#include "kroncover/graph.hpp"
#include "kroncover/homology.hpp"
#include "kroncover/perm.hpp"

namespace kc {

// Serializers produce byte-deterministic output for fixed inputs: JSON keys
// are emitted sorted and arrays keep construction order.

/// {"n": int, "edges": [[u,v],...] sorted, "labels": [...] when present}
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

/// Graph JSON plus "parity": array of 1/2.
std::string bigraph_to_json(const Bigraph& b);
Bigraph bigraph_from_json(const std::string& text);

/// Undirected DOT with label attributes when the graph has labels.
std::string graph_to_dot(const Graph& g, const std::string& name = "G");

/// DIMACS .col ("p edge n m" + 1-based "e u v" lines). Loop-free graphs only.
std::string graph_to_dimacs(const Graph& g);
Graph graph_from_dimacs(const std::string& text);

/// Coloring as "s <palette>" plus 1-based "v <vertex> <color>" lines.
std::string coloring_to_sol(const Coloring& c);
Coloring coloring_from_sol(const std::string& text);

std::string coloring_to_json(const Coloring& c);

/// {"vertices": [...], "facets": [[...],...]}
std::string complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const std::string& text);

/// Per-dimension {"betti": int, "torsion": [...]}.
std::string homology_to_json(const HomologyReport& report);

/// Permutation as 0-based image array.
std::string permutation_to_json(const Permutation& p);

}  // namespace kc
