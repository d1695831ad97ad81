#include "berge/constructions.hpp"

#include <algorithm>
#include <functional>

#include "berge/errors.hpp"

namespace berge {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw InputError(what);
}

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// All r-subsets of `pool` (sorted), in lexicographic order.
void subsets(const std::vector<Vertex>& pool, int r, const std::function<void(const Edge&)>& out) {
  std::vector<int> idx(static_cast<std::size_t>(r));
  const int n = static_cast<int>(pool.size());
  if (r > n) return;
  for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    Edge e;
    for (int i : idx) e.push_back(pool[static_cast<std::size_t>(i)]);
    out(e);
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

Construction gen_Hk(int r, int k, int m) {
  require(r >= 3, "Hk needs r >= 3");
  require(m >= 2, "Hk needs m >= 2");
  require(k >= 3 && k <= r, "Hk needs 3 <= k <= r");
  const int n = m * (r - 1) + 2;
  std::vector<Edge> edges;
  for (int i = 1; i <= m; ++i) {
    const int base = 2 + (i - 1) * (r - 1);
    for (int j = 1; j <= k - 1; ++j) {
      Edge e{0, 1};
      for (int t = 1; t <= r - 1; ++t)
        if (t != j) e.push_back(base + t - 1);
      edges.push_back(e);
    }
  }
  Construction c{Hypergraph(n, std::move(edges), r), {}};
  c.spec.name = "Hk";
  c.spec.parameters = {{"r", r}, {"k", k}, {"m", m}};
  c.spec.expected.min_degree = k - 2;
  // With k = r = 3 every blade vertex has degree 1, so only x and y can lie
  // on a cycle.
  c.spec.expected.circumference = (k == 3 && r == 3) ? 2 : 2 * k - 2;
  if (k >= 4)
    c.spec.expected.connectivity = 2;
  else
    c.spec.warnings.push_back("k = 3 gives blade vertices of degree 1, so the instance is not 2-connected");
  return c;
}

Construction gen_H1(int r, int k, int q) {
  require(q >= 2, "H1 needs q >= 2");
  require(r >= 3 && r + 1 <= k, "H1 needs 4 <= r+1 <= k");
  const int n = q * (k - 2) + 2;
  std::vector<Edge> edges;
  for (int i = 1; i <= q; ++i) {
    std::vector<Vertex> pool{0, 1};
    for (int t = 0; t < k - 2; ++t) pool.push_back(2 + (i - 1) * (k - 2) + t);
    subsets(pool, r, [&](const Edge& e) { edges.push_back(e); });
  }
  Construction c{Hypergraph(n, std::move(edges), r), {}};
  c.spec.name = "H1";
  c.spec.parameters = {{"r", r}, {"k", k}, {"q", q}, {"n", n}};
  c.spec.expected.min_degree = static_cast<int>(binom(k - 1, r - 1));
  c.spec.expected.circumference = 2 * k - 2;
  c.spec.expected.circumference_relation = Relation::at_most;
  if (n > 2 * k) c.spec.warnings.push_back("n exceeds 2k");
  return c;
}

Construction gen_H2(int r, int k, int n) {
  require(r >= 2, "H2 needs r >= 2");
  require(k >= r, "H2 needs k >= r");
  require(n >= k, "H2 needs n >= k");
  std::vector<Vertex> xs;
  for (int v = 0; v < k - 1; ++v) xs.push_back(v);
  std::vector<Edge> edges;
  // Lexicographic order over all r-subsets with at most one Y vertex: the Y
  // vertex, if any, is the largest element.
  std::vector<Vertex> all;
  for (int v = 0; v < n; ++v) all.push_back(v);
  subsets(all, r, [&](const Edge& e) {
    int in_y = 0;
    for (Vertex v : e) in_y += v >= k - 1;
    if (in_y <= 1) edges.push_back(e);
  });
  Construction c{Hypergraph(n, std::move(edges), r), {}};
  c.spec.name = "H2";
  c.spec.parameters = {{"r", r}, {"k", k}, {"n", n}};
  c.spec.expected.min_degree = static_cast<int>(binom(k - 1, r - 1));
  c.spec.expected.circumference = 2 * k - 2;
  c.spec.expected.circumference_relation = Relation::at_most;
  c.spec.expected.connectivity = k - 1;
  if (!(r >= 3 && r + 1 <= k)) c.spec.warnings.push_back("outside the stated range 4 <= r+1 <= k");
  return c;
}

Construction gen_G3(int a, int b, int a_prime, int b_prime) {
  require(a >= 1 && b >= 1, "G3 needs a, b >= 1");
  require(a_prime >= b_prime && b_prime >= a + b - 1, "G3 needs a' >= b' >= a+b-1");
  const int p1 = a_prime - b, p4 = b_prime - a;
  const int s1 = 0, s2 = p1, s3 = p1 + a, s4 = p1 + a + b, n = s4 + p4;
  std::vector<Edge> edges;
  auto join = [&](int from, int nf, int to, int nt) {
    for (int u = from; u < from + nf; ++u)
      for (int v = to; v < to + nt; ++v) edges.push_back({u, v});
  };
  join(s1, p1, s2, a);
  join(s2, a, s3, b);
  join(s3, b, s4, p4);
  std::sort(edges.begin(), edges.end());
  Construction c{Hypergraph(n, std::move(edges), 2), {}};
  c.spec.name = "G3";
  c.spec.parameters = {{"a", a}, {"b", b}, {"a_prime", a_prime}, {"b_prime", b_prime}};
  // Bipartition sides have sizes a' and b'; the smaller side is B.
  c.spec.extra["side_A"] = a_prime;
  c.spec.extra["side_B"] = b_prime;
  c.spec.extra["cycle_lower_bound"] = 2 * std::min({b_prime, a + b - 1, 2 * a - 2});
  if (p1 == 0 || p4 == 0) c.spec.warnings.push_back("degenerate: an outer part is empty");
  return c;
}

Construction gen_Kbip(int k, int n) {
  require(k >= 2 && 2 * k <= n, "Kbip needs 2 <= k <= n/2");
  std::vector<Edge> edges;
  for (int x = 0; x < k - 1; ++x)
    for (int y = k - 1; y < n; ++y) edges.push_back({x, y});
  Construction c{Hypergraph(n, std::move(edges), 2), {}};
  c.spec.name = "Kbip";
  c.spec.parameters = {{"k", k}, {"n", n}};
  c.spec.expected.min_degree = k - 1;
  c.spec.expected.circumference = 2 * k - 2;
  // I_H of a graph is its subdivision, so it is at most 2-connected; the
  // graph itself is (k-1)-connected.
  c.spec.expected.connectivity = std::min(k - 1, 2);
  c.spec.extra["graph_connectivity"] = k - 1;
  return c;
}

nlohmann::json to_json(const ConstructionSpec& s) {
  nlohmann::json exp = nlohmann::json::object();
  if (s.expected.min_degree) exp["min_degree"] = *s.expected.min_degree;
  if (s.expected.circumference) {
    exp["circumference"] = *s.expected.circumference;
    exp["circumference_relation"] = s.expected.circumference_relation == Relation::equal ? "=" : "<=";
  }
  if (s.expected.connectivity) exp["connectivity_at_least"] = *s.expected.connectivity;
  nlohmann::json j{{"name", s.name}, {"parameters", s.parameters}, {"expected", exp}};
  if (!s.extra.empty()) j["extra"] = s.extra;
  if (!s.warnings.empty()) j["warnings"] = s.warnings;
  return j;
}

}  // namespace berge
