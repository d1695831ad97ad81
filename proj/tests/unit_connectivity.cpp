#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "berge/connectivity.hpp"
#include "berge/constructions.hpp"
#include "berge/errors.hpp"
#include "oracles.hpp"

using namespace berge;

namespace {
Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return make_graph(n, e);
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return make_graph(n, e);
}
}  // namespace

TEST_CASE("small graphs") {
  CHECK(vertex_connectivity(complete_graph(4)) == 3);
  CHECK(vertex_connectivity(make_graph(3, {{0, 1}, {1, 2}})) == 1);
  CHECK(vertex_connectivity(make_graph(4, {{0, 1}, {2, 3}})) == 0);
  CHECK(vertex_connectivity(make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})) == 2);
  CHECK_THROWS_AS(make_graph(2, {{1, 1}}), InputError);
  CHECK(make_graph(3, {{0, 1}, {1, 0}}).edge_count() == 1);
}

TEST_CASE("incidence graph connectivity of constructions") {
  auto h2 = gen_H2(3, 4, 8).graph;
  CHECK(vertex_connectivity(incidence_as_graph(h2)) == 3);
  CHECK(is_k_connected(h2, 3));
  CHECK_FALSE(is_k_connected(h2, 4));

  // Two triangles sharing vertex 0.
  Hypergraph bow(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}, 2);
  CHECK_FALSE(is_k_connected(bow, 2));
  CHECK(is_k_connected(bow, 1));

  // With k = 3 every blade vertex of H_k sits in a single edge.
  CHECK_FALSE(is_k_connected(gen_Hk(3, 3, 3).graph, 2));
  CHECK(is_k_connected(gen_Hk(4, 4, 2).graph, 2));
}

TEST_CASE("vertex connectivity agrees with separator enumeration") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 7;
    auto g = random_graph(rng, n, 0.3 + 0.1 * (trial % 6));
    const int kappa = oracle::vertex_connectivity(g);
    CHECK(vertex_connectivity(g) == kappa);
    CHECK(is_biconnected(g) == (kappa >= 2));
    CHECK(is_connected(g) == (kappa >= 1 || n == 1));
    for (int k = 1; k <= 4; ++k) CHECK(is_k_connected(g, k) == (kappa >= k));
  }
}

TEST_CASE("local connectivity counts disjoint paths") {
  auto c6 = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  CHECK(local_connectivity(c6, 0, 3, 10) == 2);
  auto k5m = make_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(local_connectivity(k5m, 0, 1, 10) == 3);
  CHECK(local_connectivity(k5m, 0, 1, 2) == 2);
}

TEST_CASE("aligned paths examples") {
  auto c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto r = aligned_disjoint_paths(c4, {0, 1, 2}, 3);
  CHECK(r.p1 == std::vector<int>{0, 3});
  CHECK(r.p2 == std::vector<int>{0, 1, 2});
  CHECK(check_aligned_paths(c4, {0, 1, 2}, 3, r));

  auto k4 = complete_graph(4);
  auto s = aligned_disjoint_paths(k4, {0, 1, 2}, 3);
  CHECK(check_aligned_paths(k4, {0, 1, 2}, 3, s));
  CHECK(oracle::aligned_pair_exists(k4, {0, 1, 2}, 3));

  // Hand-broken results are rejected.
  CHECK_FALSE(check_aligned_paths(c4, {0, 1, 2}, 3, {{0, 1, 2, 3}, {0, 1, 2}}));
  CHECK_FALSE(check_aligned_paths(c4, {0, 1, 2}, 3, {{0, 3}, {0, 3, 2}}));

  auto path3 = make_graph(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(aligned_disjoint_paths(path3, {0, 1}, 2), PreconditionError);
  CHECK_THROWS_AS(aligned_disjoint_paths(c4, {0, 2}, 3), InputError);

  CHECK(aligned_with({0, 5, 2}, {0, 1, 2}));
  CHECK_FALSE(aligned_with({0, 2, 1}, {0, 1, 2}));
}

TEST_CASE("aligned paths match exhaustive pair search on random 2-connected graphs") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 300 && checked < 120; ++trial) {
    const int n = 4 + trial % 3;
    auto g = random_graph(rng, n, 0.6);
    if (!is_biconnected(g)) continue;
    ++checked;
    // q: a shortest path from 0 to the farthest node, z: some other node.
    std::vector<int> dist(static_cast<std::size_t>(n), -1), parent(static_cast<std::size_t>(n), -1);
    std::vector<int> queue{0};
    dist[0] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (int y : g.adj[static_cast<std::size_t>(queue[i])])
        if (dist[static_cast<std::size_t>(y)] < 0) {
          dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(queue[i])] + 1;
          parent[static_cast<std::size_t>(y)] = queue[i];
          queue.push_back(y);
        }
    std::vector<int> q;
    for (int v = queue.back(); v >= 0; v = parent[static_cast<std::size_t>(v)]) q.insert(q.begin(), v);
    for (int z = 0; z < n; ++z) {
      if (z == 0 || z == q.back()) continue;
      auto res = aligned_disjoint_paths(g, q, z);
      CHECK(check_aligned_paths(g, q, z, res));
      CHECK(oracle::aligned_pair_exists(g, q, z));
    }
  }
  CHECK(checked >= 50);
}
