#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "berge/hypergraph.hpp"

namespace berge {

// Simple undirected graph with sorted adjacency lists.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  bool adjacent(int u, int v) const;
  std::size_t edge_count() const;
};

// Loops are rejected, repeated pairs collapse.
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

// I_H as a plain graph: nodes 0..n-1 are vertices, n+j is edge j.
Graph as_graph(const IncidenceGraph& ig);
Graph incidence_as_graph(const Hypergraph& h);

// kappa(g), with kappa(K_n) = n-1.
int vertex_connectivity(const Graph& g);

// Number of internally disjoint s-t paths for non-adjacent s != t, capped at `cap`.
int local_connectivity(const Graph& g, int s, int t, int cap);

bool is_connected(const Graph& g);
// kappa(g) >= 2, via articulation points.
bool is_biconnected(const Graph& g);
bool is_k_connected(const Graph& g, int k);
bool is_k_connected(const Hypergraph& h, int k);

struct AlignedPathsResult {
  std::vector<int> p1;  // x -> z
  std::vector<int> p2;  // x -> y
};

// Every node of `path` that is also on `q` appears in the same relative
// order as on q.
bool aligned_with(const std::vector<int>& path, const std::vector<int>& q);

// Structural check of a returned pair against (g, q, z).
bool check_aligned_paths(const Graph& g, const std::vector<int>& q, int z, const AlignedPathsResult& res);

// Lexicographically least (p1, p2) pair. Throws PreconditionError when g is
// not 2-connected, InputError when q is not a simple path of g or z is bad,
// BudgetExhausted after `budget` search expansions.
AlignedPathsResult aligned_disjoint_paths(const Graph& g, const std::vector<int>& q, int z,
                                          std::uint64_t budget = 10'000'000);

}  // namespace berge
