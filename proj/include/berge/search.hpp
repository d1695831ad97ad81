#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "berge/berge.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct CycleSearchResult {
  int length = 0;                     // best length found (exact when exhaustive)
  std::optional<BergeCycle> witness;  // present iff length >= 2
  bool exhaustive = true;             // search finished: length is c(H)
  bool budget_exceeded = false;
  std::uint64_t expansions = 0;
};

struct PathSearchResult {
  int length = 0;  // edge count of the best full Berge path
  std::optional<BergePath> witness;
  bool exhaustive = true;
  bool budget_exceeded = false;
  std::uint64_t expansions = 0;
};

// Exact circumference. Requires n <= 64. On exhaustion the result carries the
// best cycle found so far and exhaustive == false.
CycleSearchResult circumference(const Hypergraph& h, std::uint64_t budget = kDefaultBudget);

// Longest full Berge path, oriented so that its first vertex is smaller than its last.
PathSearchResult longest_berge_path(const Hypergraph& h, std::uint64_t budget = kDefaultBudget);

// False when m < n. Throws BudgetExhausted when the search cannot decide.
bool has_hamiltonian_berge_cycle(const Hypergraph& h, std::uint64_t budget = kDefaultBudget);

// Calls fn for every vertex sequence (minimum vertex first, v_1 < v_{L-1})
// that is the vertex sequence of some Berge cycle of length L. fn returns
// false to stop. `expansions` accumulates search nodes; BudgetExhausted is
// thrown past `budget`.
void for_each_cycle_skeleton(const Hypergraph& h, int length,
                             const std::function<bool(const std::vector<Vertex>&)>& fn,
                             std::uint64_t budget, std::uint64_t& expansions);

// Lexicographically least edge assignment for a cycle vertex sequence, if any.
std::optional<std::vector<EdgeId>> assign_cycle_edges(const Hypergraph& h, const std::vector<Vertex>& vertices,
                                                      const std::vector<char>& forbidden_edges = {});

}  // namespace berge
