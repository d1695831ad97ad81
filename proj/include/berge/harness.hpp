#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "berge/berge.hpp"
#include "berge/hypergraph.hpp"
#include "berge/search.hpp"

namespace berge {

enum class TheoremId { theorem19, dirac, jackson_cor, mainold2 };

TheoremId parse_theorem_id(std::string_view name);
std::string_view theorem_name(TheoremId id);

struct SamplerOptions {
  int n = 0;
  int r = 0;
  int min_degree = 0;
  bool two_connected = true;
  std::uint64_t seed = 0;
};

// Adds random r-sets until the degree (and connectivity) targets hold, then
// removes random edges while both keep holding. Half the draws run the
// removal pass to the end, the rest stop after a random number of removals.
// Throws PreconditionError when even the complete r-graph misses the targets.
Hypergraph sample_hypergraph(const SamplerOptions& opt);

// 2-connected r-graph with min degree >= k. Requires 3 <= k <= r+1 <= n.
Hypergraph random_2connected_rgraph(int n, int r, int k, std::uint64_t seed);

enum class Status { holds, violation, inconclusive, not_applicable };
std::string_view status_name(Status s);

struct TheoremRecord {
  TheoremId theorem = TheoremId::theorem19;
  std::uint64_t hash = 0;
  int n = 0, r = 0, m = 0, k = 0, delta = 0;
  bool two_connected = false;
  bool hypotheses = false;
  std::string note;  // first failed hypothesis, if any
  int bound = 0;
  int circumference = 0;
  bool exhaustive = false;
  std::optional<BergeCycle> witness;
  std::uint64_t expansions = 0;
  Status status = Status::not_applicable;
};

// Hypotheses are checked first; the circumference is computed only when they
// hold. k is ignored for mainold2.
TheoremRecord verify_theorem(const Hypergraph& h, int k, TheoremId id, std::uint64_t budget = kDefaultBudget);
nlohmann::json to_json(const TheoremRecord& rec);

struct BatchConfig {
  TheoremId theorem = TheoremId::theorem19;
  std::vector<int> n, r, k;
  int samples = 1000;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBudget;
  bool heuristic = false;      // also run find_long_cycle on each instance
  int heuristic_restarts = 32;
  bool include_records = true;
  unsigned threads = 0;        // 0 = hardware concurrency; never affects output
};

// Reads {"grid": {"n": [...], "r": [...], "k": [...]}, "samples", "seed",
// "budget", "heuristic", "heuristic_restarts", "records", "threads"}. Missing
// grid axes fall back to theorem defaults. Throws InputError on bad values.
BatchConfig batch_config_from_json(const nlohmann::json& j, TheoremId theorem);

// Report for every grid cell, records sorted by instance hash. The output
// depends only on the config (threads excluded).
nlohmann::json batch_verify(const BatchConfig& cfg);

std::string hash_hex(std::uint64_t h);

}  // namespace berge
