#include "kroncover/bigraph.hpp"

#include <algorithm>
#include <stdexcept>

#include "kroncover/errors.hpp"

namespace kc {

Bigraph::Bigraph(Graph g, std::vector<int> p) : graph(std::move(g)), parity(std::move(p)) {
  if (static_cast<int>(parity.size()) != graph.vertex_count())
    throw std::invalid_argument("Bigraph: parity size mismatch");
  for (int v : parity)
    if (v != 1 && v != 2) throw std::invalid_argument("Bigraph: parity values must be 1 or 2");
  for (const auto& [u, v] : graph.edges())
    if (parity[static_cast<std::size_t>(u)] == parity[static_cast<std::size_t>(v)])
      throw std::invalid_argument("Bigraph: parity is not a proper 2-coloring");
}

GraphMap::GraphMap(Graph source, Graph target, std::vector<int> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (static_cast<int>(assignment_.size()) != source_.vertex_count())
    throw std::invalid_argument("GraphMap: assignment size mismatch");
  for (int v : assignment_)
    if (v < 0 || v >= target_.vertex_count())
      throw std::invalid_argument("GraphMap: image out of range");
  for (const auto& [u, v] : source_.edges())
    if (!target_.adjacent((*this)(u), (*this)(v)))
      throw std::invalid_argument("GraphMap: not a graph homomorphism");
}

bool GraphMap::is_isomorphism() const {
  if (source_.vertex_count() != target_.vertex_count()) return false;
  std::vector<char> hit(assignment_.size(), 0);
  for (int v : assignment_) {
    if (hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = 1;
  }
  // Bijective homomorphism; inverse preserves edges iff edge counts agree.
  return source_.edge_count() == target_.edge_count();
}

MapParity parity_of_map(const Bigraph& x, const Bigraph& y, const std::vector<int>& assignment) {
  if (static_cast<int>(assignment.size()) != x.graph.vertex_count())
    throw std::invalid_argument("parity_of_map: assignment size mismatch");
  bool all_same = true, all_flip = true;
  for (int v = 0; v < x.graph.vertex_count(); ++v) {
    int a = x.parity[static_cast<std::size_t>(v)];
    int b = y.parity[static_cast<std::size_t>(assignment[static_cast<std::size_t>(v)])];
    if (a == b) all_flip = false;
    else all_same = false;
  }
  if (all_same) return MapParity::even;
  if (all_flip) return MapParity::odd;
  return MapParity::neither;
}

bool is_odd_involution(const Bigraph& x, const Permutation& p) {
  if (p.degree() != x.graph.vertex_count()) return false;
  if (!is_involution(p)) return false;
  for (const auto& [u, v] : x.graph.edges())
    if (!x.graph.adjacent(p(u), p(v))) return false;
  return parity_of_map(x, x, p.images()) == MapParity::odd;
}

OddInvolution odd_involution(const Bigraph& x, Permutation p) {
  if (!is_odd_involution(x, p))
    throw std::invalid_argument("odd_involution: not an odd involution of the bigraph");
  return OddInvolution{std::move(p)};
}

KroneckerCover kronecker_cover(const Graph& g) {
  if (!g.is_simple())
    throw std::invalid_argument("kronecker_cover: input graph has loops");
  int n = g.vertex_count();
  Graph product = categorical_product(complete_graph(2), g);
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(static_cast<std::size_t>(2 * n));
    for (int layer = 0; layer < 2; ++layer)
      for (int v = 0; v < n; ++v)
        labels.push_back("(" + std::to_string(layer + 1) + ", " +
                         g.labels()[static_cast<std::size_t>(v)] + ")");
    product = with_labels(product, std::move(labels));
  }
  std::vector<int> parity(static_cast<std::size_t>(2 * n));
  for (int v = 0; v < 2 * n; ++v) parity[static_cast<std::size_t>(v)] = v < n ? 1 : 2;
  Bigraph big(std::move(product), std::move(parity));
  std::vector<int> swap_img(static_cast<std::size_t>(2 * n));
  for (int v = 0; v < n; ++v) {
    swap_img[static_cast<std::size_t>(v)] = n + v;
    swap_img[static_cast<std::size_t>(n + v)] = v;
  }
  OddInvolution swap = odd_involution(big, Permutation(std::move(swap_img)));
  return KroneckerCover{std::move(big), std::move(swap)};
}

Quotient quotient(const Bigraph& x, const OddInvolution& alpha) {
  if (!is_odd_involution(x, alpha.perm))
    throw std::invalid_argument("quotient: alpha is not an odd involution of X");
  int n = x.graph.vertex_count();
  std::vector<int> orbit_of(static_cast<std::size_t>(n), -1);
  std::vector<std::array<int, 2>> members;
  for (int v = 0; v < n; ++v) {
    if (orbit_of[static_cast<std::size_t>(v)] >= 0) continue;
    int w = alpha.perm(v);
    int id = static_cast<int>(members.size());
    orbit_of[static_cast<std::size_t>(v)] = id;
    orbit_of[static_cast<std::size_t>(w)] = id;
    members.push_back({v, w});
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : x.graph.edges())
    edges.emplace_back(orbit_of[static_cast<std::size_t>(u)], orbit_of[static_cast<std::size_t>(v)]);
  std::vector<std::string> labels;
  if (x.graph.has_labels()) {
    labels.reserve(members.size());
    for (const auto& m : members)
      labels.push_back("{" + x.graph.labels()[static_cast<std::size_t>(m[0])] + " | " +
                       x.graph.labels()[static_cast<std::size_t>(m[1])] + "}");
  }
  Graph q(static_cast<int>(members.size()), std::move(edges), std::move(labels));
  GraphMap projection(x.graph, q, orbit_of);
  return Quotient{std::move(q), std::move(projection), std::move(orbit_of), std::move(members)};
}

bool quotient_is_simple(const Bigraph& x, const OddInvolution& alpha) {
  if (!is_odd_involution(x, alpha.perm))
    throw std::invalid_argument("quotient_is_simple: alpha is not an odd involution of X");
  for (int v = 0; v < x.graph.vertex_count(); ++v)
    if (x.graph.adjacent(v, alpha.perm(v))) return false;
  return true;
}

GraphMap canonical_cover_iso(const Bigraph& x, const OddInvolution& alpha) {
  Quotient q = quotient(x, alpha);
  // K_2 x (X/alpha) is built with the product so that quotients with loops
  // are covered as well; for simple quotients this is kronecker_cover().
  Graph cover = categorical_product(complete_graph(2), q.graph);
  int m = q.graph.vertex_count();
  std::vector<int> assignment(static_cast<std::size_t>(x.graph.vertex_count()));
  for (int v = 0; v < x.graph.vertex_count(); ++v) {
    int layer = x.parity[static_cast<std::size_t>(v)] - 1;
    assignment[static_cast<std::size_t>(v)] = layer * m + q.orbit_of[static_cast<std::size_t>(v)];
  }
  GraphMap iso(x.graph, std::move(cover), std::move(assignment));
  if (!iso.is_isomorphism())
    throw std::logic_error("canonical_cover_iso: (parity, projection) failed to be an isomorphism");
  return iso;
}

GraphMap descend_map(const GraphMap& f, const Bigraph& x, const OddInvolution& alpha,
                     const Bigraph& y, const OddInvolution& beta) {
  if (f.source() != x.graph || f.target() != y.graph)
    throw std::invalid_argument("descend_map: f does not map X to Y");
  for (int v = 0; v < x.graph.vertex_count(); ++v)
    if (f(alpha.perm(v)) != beta.perm(f(v)))
      throw std::invalid_argument("descend_map: f does not intertwine alpha and beta");
  Quotient qx = quotient(x, alpha);
  Quotient qy = quotient(y, beta);
  std::vector<int> assignment(static_cast<std::size_t>(qx.graph.vertex_count()));
  for (int orb = 0; orb < qx.graph.vertex_count(); ++orb)
    assignment[static_cast<std::size_t>(orb)] =
        qy.orbit_of[static_cast<std::size_t>(f(qx.orbit_members[static_cast<std::size_t>(orb)][0]))];
  GraphMap fbar(qx.graph, qy.graph, std::move(assignment));
  if (f.is_isomorphism() && !fbar.is_isomorphism())
    throw std::logic_error("descend_map: descent of an isomorphism failed to be one");
  return fbar;
}

GraphMap lift_map(const GraphMap& fbar, const Bigraph& x, const OddInvolution& alpha,
                  const Bigraph& y, const OddInvolution& beta) {
  Quotient qx = quotient(x, alpha);
  Quotient qy = quotient(y, beta);
  if (fbar.source() != qx.graph || fbar.target() != qy.graph)
    throw std::invalid_argument("lift_map: fbar does not map X/alpha to Y/beta");
  // The even lift is forced: x must go to the member of the image orbit
  // carrying the parity of x. The two members have opposite parities since
  // beta is odd.
  std::vector<int> assignment(static_cast<std::size_t>(x.graph.vertex_count()));
  for (int v = 0; v < x.graph.vertex_count(); ++v) {
    int target_orbit = fbar(qx.orbit_of[static_cast<std::size_t>(v)]);
    const auto& mem = qy.orbit_members[static_cast<std::size_t>(target_orbit)];
    int pick = y.parity[static_cast<std::size_t>(mem[0])] == x.parity[static_cast<std::size_t>(v)]
                   ? mem[0]
                   : mem[1];
    assignment[static_cast<std::size_t>(v)] = pick;
  }
  GraphMap lift(x.graph, y.graph, std::move(assignment));
  if (parity_of_map(x, y, lift.assignment()) != MapParity::even)
    throw std::logic_error("lift_map: lift is not even");
  if (fbar.is_isomorphism() && !lift.is_isomorphism())
    throw std::logic_error("lift_map: lift of an isomorphism failed to be one");
  return lift;
}

namespace {

bool intertwines(const Permutation& f, const Permutation& a, const Permutation& b) {
  for (int v = 0; v < f.degree(); ++v)
    if (f(a(v)) != b(f(v))) return false;
  return true;
}

void require_enumerable(const PermutationGroup& aut, std::uint64_t budget, const char* who) {
  if (aut.order() > budget)
    throw budget_error(std::string(who) + ": automorphism group exceeds enumeration budget");
}

std::optional<Permutation> conjugacy_witness(const Bigraph& x, const OddInvolution& alpha,
                                             const OddInvolution& beta,
                                             const PermutationGroup& aut, bool even_only) {
  std::optional<Permutation> best;
  aut.for_each_element([&](const Permutation& f) {
    if (even_only && parity_of_map(x, x, f.images()) != MapParity::even) return;
    if (!intertwines(f, alpha.perm, beta.perm)) return;
    if (!best || f < *best) best = f;
  });
  return best;
}

}  // namespace

std::optional<Permutation> are_evenly_conjugate(const Bigraph& x, const OddInvolution& alpha,
                                                const OddInvolution& beta,
                                                const PermutationGroup& aut,
                                                std::uint64_t budget) {
  require_enumerable(aut, budget, "are_evenly_conjugate");
  return conjugacy_witness(x, alpha, beta, aut, true);
}

std::optional<Permutation> are_conjugate(const Bigraph& x, const OddInvolution& alpha,
                                         const OddInvolution& beta, const PermutationGroup& aut,
                                         std::uint64_t budget) {
  require_enumerable(aut, budget, "are_conjugate");
  return conjugacy_witness(x, alpha, beta, aut, false);
}

std::vector<OddInvolution> enumerate_odd_involutions(const Bigraph& x,
                                                     const PermutationGroup& aut,
                                                     std::uint64_t budget) {
  require_enumerable(aut, budget, "enumerate_odd_involutions");
  std::vector<Permutation> found;
  aut.for_each_element([&](const Permutation& p) {
    if (!is_involution(p) || p.is_identity()) return;
    if (parity_of_map(x, x, p.images()) != MapParity::odd) return;
    found.push_back(p);
  });
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<OddInvolution> out;
  out.reserve(found.size());
  for (auto& p : found) out.push_back(OddInvolution{std::move(p)});
  return out;
}

PermutationGroup even_centralizer(const Bigraph& x, const OddInvolution& alpha,
                                  const PermutationGroup& aut, std::uint64_t budget) {
  return subgroup_where(
      aut,
      [&](const Permutation& f) {
        return parity_of_map(x, x, f.images()) == MapParity::even &&
               intertwines(f, alpha.perm, alpha.perm);
      },
      budget);
}

OddInvolutionFactors decompose_odd_involution(const Graph& base, const Permutation& alpha) {
  int n = base.vertex_count();
  if (alpha.degree() != 2 * n)
    throw std::invalid_argument("decompose_odd_involution: degree is not 2|V(G)|");
  std::vector<int> factor(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    int img = alpha(v);
    if (img < n)
      throw std::invalid_argument("decompose_odd_involution: alpha does not swap layers");
    factor[static_cast<std::size_t>(v)] = img - n;
  }
  for (int v = 0; v < n; ++v)
    if (alpha(n + v) != factor[static_cast<std::size_t>(v)])
      throw std::invalid_argument("decompose_odd_involution: alpha is not of the form tau x alpha'");
  Permutation ap(std::move(factor));
  if (!is_involution(ap))
    throw std::invalid_argument("decompose_odd_involution: factor is not an involution");
  for (const auto& [u, v] : base.edges())
    if (!base.adjacent(ap(u), ap(v)))
      throw std::invalid_argument("decompose_odd_involution: factor is not an automorphism");
  return OddInvolutionFactors{std::move(ap)};
}

}  // namespace kc
