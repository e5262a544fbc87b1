#include "kroncover/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace kc {

namespace {

using nlohmann::json;

std::uint64_t fnv1a(const void* data, std::size_t size, std::uint64_t seed) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= bytes[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

CanonicalCache::CanonicalCache(std::string directory) : dir_(std::move(directory)) {
  if (dir_.empty()) {
    if (const char* env = std::getenv("KRONCOVER_CACHE_DIR")) dir_ = env;
  }
  if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::string CanonicalCache::digest(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  int n = g.vertex_count();
  h = fnv1a(&n, sizeof(n), h);
  for (const auto& [u, v] : g.edges()) {
    h = fnv1a(&u, sizeof(u), h);
    h = fnv1a(&v, sizeof(v), h);
  }
  std::ostringstream out;
  out << std::hex << h << "-" << n << "-" << g.edge_count();
  return out.str();
}

std::shared_ptr<CanonicalCache::Entry> CanonicalCache::lookup(const Graph& g,
                                                              const std::string& key) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memory_.find(key);
    if (it != memory_.end()) return it->second;
  }
  if (dir_.empty()) return nullptr;
  std::filesystem::path path = std::filesystem::path(dir_) / (key + ".json");
  std::ifstream in(path);
  if (!in) return nullptr;
  try {
    json j = json::parse(in);
    // collision guard: the stored edge list must match exactly
    if (j.at("n").get<int>() != g.vertex_count()) return nullptr;
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    if (edges != g.edges()) return nullptr;
    auto entry = std::make_shared<Entry>();
    entry->form.labeling = Permutation(j.at("labeling").get<std::vector<int>>());
    for (const auto& e : j.at("certificate"))
      entry->form.certificate_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    for (const auto& gen : j.at("generators"))
      entry->form.generators.push_back(Permutation(gen.get<std::vector<int>>()));
    std::lock_guard<std::mutex> lock(mutex_);
    memory_[key] = entry;
    return entry;
  } catch (const std::exception&) {
    return nullptr;
  }
}

void CanonicalCache::store(const Graph& g, const std::string& key,
                           const std::shared_ptr<Entry>& entry) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    memory_[key] = entry;
  }
  if (dir_.empty()) return;
  json j;
  j["n"] = g.vertex_count();
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  j["edges"] = std::move(edges);
  j["labeling"] = entry->form.labeling.images();
  json cert = json::array();
  for (const auto& [u, v] : entry->form.certificate_edges) cert.push_back(json::array({u, v}));
  j["certificate"] = std::move(cert);
  json gens = json::array();
  for (const auto& gen : entry->form.generators) gens.push_back(gen.images());
  j["generators"] = std::move(gens);

  std::lock_guard<std::mutex> lock(mutex_);
  std::filesystem::path path = std::filesystem::path(dir_) / (key + ".json");
  std::ofstream out(path);
  out << j.dump();
}

CanonicalForm CanonicalCache::canonical(const Graph& g, int vertex_budget,
                                        long long node_budget) {
  std::string key = digest(g);
  if (auto entry = lookup(g, key)) return entry->form;
  auto entry = std::make_shared<Entry>();
  entry->form = canonical_form(g, {}, vertex_budget, node_budget);
  store(g, key, entry);
  return entry->form;
}

PermutationGroup CanonicalCache::automorphisms(const Graph& g, int vertex_budget,
                                               long long node_budget) {
  CanonicalForm form = canonical(g, vertex_budget, node_budget);
  return PermutationGroup(g.vertex_count(), form.generators);
}

}  // namespace kc
