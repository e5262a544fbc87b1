#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "kroncover/canonical.hpp"
#include "kroncover/graph.hpp"
#include "kroncover/perm_group.hpp"

namespace kc {

/// Memoizes canonical forms and automorphism groups, keyed by a digest of
/// the sorted edge list. Optionally persists entries as JSON files under a
/// directory (set explicitly or through the KRONCOVER_CACHE_DIR variable).
/// Concurrent readers are fine; writers are serialized. Disk entries store
/// the defining edge list and are ignored on mismatch, so a digest
/// collision can never flip a verdict.
class CanonicalCache {
 public:
  explicit CanonicalCache(std::string directory = "");

  static std::string digest(const Graph& g);

  CanonicalForm canonical(const Graph& g, int vertex_budget = kDefaultCanonicalVertexBudget,
                          long long node_budget = kDefaultCanonicalNodeBudget);
  PermutationGroup automorphisms(const Graph& g,
                                 int vertex_budget = kDefaultCanonicalVertexBudget,
                                 long long node_budget = kDefaultCanonicalNodeBudget);

  const std::string& directory() const { return dir_; }

 private:
  struct Entry {
    CanonicalForm form;
  };

  std::shared_ptr<Entry> lookup(const Graph& g, const std::string& key);
  void store(const Graph& g, const std::string& key, const std::shared_ptr<Entry>& entry);

  std::string dir_;
  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Entry>> memory_;
};

}  // namespace kc
