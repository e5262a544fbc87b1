#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kroncover/cache.hpp"

namespace kc {

struct Budgets {
  int canonical_vertices = 256;
  long long canonical_nodes = 2'000'000;
  long long coloring_nodes = 200'000'000;
  long long simplices = 200'000;
  std::uint64_t group_elements = 10'000'000;
  long long tietze = 2'000'000;
};

/// One machine-checked fact tied to a named claim. verdict is "pass" when
/// expected equals computed, "fail" when they differ, and "inconclusive"
/// when a budget ran out before a verdict was reached (never a wrong one).
struct VerificationReport {
  std::string claim;
  std::string params;
  std::string statement;
  std::string expected;  // includes the provenance of the expected value
  std::string computed;
  std::string verdict;
  double wall_ms = 0.0;
};

std::string report_to_json_line(const VerificationReport& r, bool include_wall = true);

/// The verification grid: (n,k) family parameters. The default covers the
/// instances every claim is pinned to.
std::vector<std::pair<int, int>> default_grid();
std::vector<std::pair<int, int>> rectangular_grid(int max_n, int max_k);

struct VerifyOptions {
  std::vector<std::pair<int, int>> grid = default_grid();
  Budgets budgets;
  std::string only;  // claim-id prefix filter, empty = all
  int jobs = 1;
  std::string cache_dir;
};

/// Registered claim ids, in execution order.
std::vector<std::string> all_claim_ids();

/// Runs every registered claim (subject to the `only` filter) and returns
/// the reports in a deterministic order. Claims run concurrently when
/// jobs > 1; each claim is internally sequential.
std::vector<VerificationReport> run_claims(const VerifyOptions& opts);

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace kc
