// Acceptance suite: runs the full claim registry on the pinned verification
// grid and prints one line per acceptance criterion. All checks are exact
// combinatorial equalities; the only tolerated non-pass verdict is an
// "inconclusive" fundamental-group pass (criterion 14), which is flagged but
// does not fail the suite.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "kroncover/reports.hpp"

namespace {

struct Criterion {
  int number;
  std::string description;
  std::vector<std::string> claims;
  bool inconclusive_allowed;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "simplicity threshold: G_i simple iff i < k", {"thm1.simplicity"}, false},
      {2, "cover identity: K_2 x G_i(n,k) iso H(n,k), witness verified", {"thm1.cover"}, false},
      {3, "distinctness: G_i pairwise non-isomorphic", {"thm1.distinct"}, false},
      {4, "exhaustiveness: all odd involutions of H(5,2), H(6,2) classified",
       {"thm1.exhaustive"}, false},
      {5, "automorphism groups: |Aut(G_i)| = 2^i i! (n-2i)! with generating homomorphism",
       {"thm2.order"}, false},
      {6, "centralizer: brute force = formula (n <= 10); Phi fills Z(tau) (m <= 4)",
       {"thm2.centralizer", "thm2.phi"}, false},
      {7, "Mirafzal: |Aut(H)| = 2 n!; (*) onto for K(n,k), not onto for G_i, i >= 1",
       {"mirafzal.order", "remark1.star_not_iso"}, false},
      {8, "Prop 7: quotient-iso = evenly conjugate = conjugate on all pairs",
       {"prop7.equiv"}, false},
      {9, "Prop 8: |even centralizer| = |Aut(G_i)|", {"prop8.centralizer"}, false},
      {10, "chromatic numbers: exact chi(G_i) = n - 2k + 2", {"thm3.chi"}, false},
      {11, "constructive coloring: proper with exactly n - 2k + 2 colors",
       {"thm3.coloring"}, false},
      {12, "chromatic counterexample: K_2 x (K_2 x K_4) iso K_2 x (K_4 + K_4), chi 2 vs 4",
       {"intro.counterexample"}, false},
      {13, "neighborhood complexes: N(G_i) iso N(K(n,k))", {"lem3_3.iso"}, false},
      {14, "connectivity evidence: homology vanishes to n-2k-1; pi_1 check at (6,2)",
       {"thm3_2.homology", "thm3_2.pi1"}, true},
      {15, "k = 1: unique simple quotient of K_2 x K_n is K_n; distance signature",
       {"remark_k1.unique"}, false},
      {16, "Lemmas 5/6: unique descent and lift, exhaustively on C_6 and K_2 x C_5",
       {"lem5_6.unique"}, false},
  };
  return list;
}

}  // namespace

int main() {
  kc::VerifyOptions opts;  // default grid pins every criterion instance
  opts.jobs = 4;
  auto reports = kc::run_claims(opts);

  std::map<std::string, std::pair<int, int>> tally;  // claim -> {pass, fail}
  std::map<std::string, int> inconclusive;
  for (const auto& r : reports) {
    if (r.verdict == "pass") tally[r.claim].first++;
    if (r.verdict == "fail") tally[r.claim].second++;
    if (r.verdict == "inconclusive") inconclusive[r.claim]++;
  }

  int failures = 0;
  for (const auto& c : criteria()) {
    int pass = 0, fail = 0, inc = 0;
    for (const auto& id : c.claims) {
      pass += tally[id].first;
      fail += tally[id].second;
      inc += inconclusive[id];
    }
    const char* verdict = "PASS";
    if (fail > 0 || pass == 0) {
      verdict = "FAIL";
      ++failures;
    } else if (inc > 0) {
      verdict = c.inconclusive_allowed ? "PASS (inconclusive tolerated)" : "FAIL";
      if (!c.inconclusive_allowed) ++failures;
    }
    std::printf("criterion %2d [%s] %s — %d checks pass, %d fail, %d inconclusive\n", c.number,
                verdict, c.description.c_str(), pass, fail, inc);
  }
  std::printf("acceptance: %s (%zu reports)\n", failures == 0 ? "ALL CRITERIA PASS" : "FAILURES",
              reports.size());
  return failures == 0 ? 0 : 1;
}
