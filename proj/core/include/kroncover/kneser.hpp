#pragma once

#include <vector>

#include "kroncover/bigraph.hpp"
#include "kroncover/graph.hpp"
#include "kroncover/perm.hpp"

namespace kc {

/// Parameters (n, k, i) of a family member G_i(n,k). Validates
/// n >= 2k >= 2 and 0 <= i <= n/2; simplicity (i < k) is a property checked
/// downstream, not a construction precondition.
struct FamilyIndex {
  int n, k, i;
  FamilyIndex(int n, int k, int i);
};

/// sigma_i = (1,2)(3,4)...(2i-1,2i) in S_n; sigma_0 is the identity.
Permutation sigma_involution(int i, int n);

/// Action of a ground permutation on colex-ranked k-subsets of [n].
Permutation subset_action(int n, int k, const Permutation& sigma);

/// tau x sigma on V(K_2 x K(n,k)): layers swap, subsets move by sigma.
Permutation tau_times_sigma(int n, int k, const Permutation& sigma);

/// H(n,k) as the Kronecker cover of K(n,k), with layer/subset labels and
/// the distinguished layer swap. n = 2k is accepted; the coloring induction
/// bottoms out there.
KroneckerCover bipartite_kneser(int n, int k);

/// H(n,k) in its subset form: all k-subsets and (n-k)-subsets of [n],
/// adjacent iff one properly contains the other. Requires n > 2k.
Graph bipartite_kneser_subset_form(int n, int k);

/// The isomorphism (1,s) -> s, (2,s) -> [n] \ s from the cover form onto the
/// subset form; verified before returning.
GraphMap subset_form_iso(int n, int k);

/// G_i(n,k) = H(n,k) / (tau x sigma_i), with orbit labels "{s | sigma_i s}".
/// Vertex ids are the colex ranks of the layer-1 representatives, so
/// G_i(n-1,k) sits on the id prefix 0..C(n-1,k)-1.
Graph g_graph(int n, int k, int i);

/// Per-i simplicity of H(n,k)/(tau x sigma_i) for i = 0..floor(n/2).
std::vector<bool> simplicity_threshold(int n, int k);

/// Vertices of G_i(n,k) whose representative k-subset contains n: exactly
/// V(G_i(n,k)) \ V(G_i(n-1,k)) under the colex embedding, and an
/// independent set.
std::vector<int> new_layer_vertices(int n, int k, int i);

}  // namespace kc
