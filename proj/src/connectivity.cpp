#include "berge/connectivity.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <string>

#include "berge/errors.hpp"

namespace berge {

bool Graph::adjacent(int u, int v) const {
  const auto& a = adj.at(static_cast<std::size_t>(u));
  return std::binary_search(a.begin(), a.end(), v);
}

std::size_t Graph::edge_count() const {
  std::size_t s = 0;
  for (const auto& a : adj) s += a.size();
  return s / 2;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  g.n = n;
  g.adj.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("graph edge endpoint out of range");
    if (u == v) throw InputError("graph loops are not allowed");
    g.adj[static_cast<std::size_t>(u)].push_back(v);
    g.adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& a : g.adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return g;
}

Graph as_graph(const IncidenceGraph& ig) {
  Graph g;
  g.n = ig.left + ig.right;
  g.adj.assign(static_cast<std::size_t>(g.n), {});
  for (int v = 0; v < ig.left; ++v)
    for (EdgeId e : ig.left_adj[static_cast<std::size_t>(v)]) g.adj[static_cast<std::size_t>(v)].push_back(ig.left + e);
  for (int e = 0; e < ig.right; ++e) {
    auto& a = g.adj[static_cast<std::size_t>(ig.left + e)];
    for (Vertex v : ig.right_adj[static_cast<std::size_t>(e)]) a.push_back(v);
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return g;
}

Graph incidence_as_graph(const Hypergraph& h) { return as_graph(incidence_graph(h)); }

namespace {

// Unit-capacity flow network with every node split into in/out halves.
class SplitNetwork {
 public:
  SplitNetwork(const Graph& g, int s, int t) : s_(s), t_(t) {
    head_.assign(static_cast<std::size_t>(2 * g.n), -1);
    for (int v = 0; v < g.n; ++v) {
      if (v != s && v != t) add(2 * v, 2 * v + 1);
      for (int w : g.adj[static_cast<std::size_t>(v)]) add(2 * v + 1, 2 * w);
    }
  }

  int max_flow(int cap) {
    int source = 2 * s_ + 1, sink = 2 * t_;
    int flow = 0;
    std::vector<int> via(head_.size());
    while (flow < cap) {
      std::fill(via.begin(), via.end(), -2);
      via[static_cast<std::size_t>(source)] = -1;
      std::queue<int> bfs;
      bfs.push(source);
      while (!bfs.empty() && via[static_cast<std::size_t>(sink)] == -2) {
        int u = bfs.front();
        bfs.pop();
        for (int a = head_[static_cast<std::size_t>(u)]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
          const auto& arc = arcs_[static_cast<std::size_t>(a)];
          if (arc.cap > 0 && via[static_cast<std::size_t>(arc.to)] == -2) {
            via[static_cast<std::size_t>(arc.to)] = a;
            bfs.push(arc.to);
          }
        }
      }
      if (via[static_cast<std::size_t>(sink)] == -2) break;
      for (int v = sink; v != source;) {
        int a = via[static_cast<std::size_t>(v)];
        arcs_[static_cast<std::size_t>(a)].cap -= 1;
        arcs_[static_cast<std::size_t>(a ^ 1)].cap += 1;
        v = arcs_[static_cast<std::size_t>(a ^ 1)].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Arc {
    int to, cap, next;
  };
  void add(int u, int v) {
    arcs_.push_back({v, 1, head_[static_cast<std::size_t>(u)]});
    head_[static_cast<std::size_t>(u)] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({u, 0, head_[static_cast<std::size_t>(v)]});
    head_[static_cast<std::size_t>(v)] = static_cast<int>(arcs_.size()) - 1;
  }

  int s_, t_;
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

}  // namespace

int local_connectivity(const Graph& g, int s, int t, int cap) {
  if (s == t || g.adjacent(s, t)) throw InputError("local connectivity needs distinct non-adjacent nodes");
  return SplitNetwork(g, s, t).max_flow(cap);
}

int vertex_connectivity(const Graph& g) {
  if (g.n < 1) throw InputError("vertex connectivity of an empty graph");
  int k = g.n - 1;
  if (!is_connected(g)) return 0;
  // A minimum separator misses one of nodes 0..k; flows from that node to all
  // later non-neighbours find it.
  for (int i = 0; i <= k && i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (!g.adjacent(i, j)) k = std::min(k, local_connectivity(g, i, j, k));
  return k;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.adj[static_cast<std::size_t>(u)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.n;
}

bool is_biconnected(const Graph& g) {
  if (g.n < 3 || !is_connected(g)) return false;
  // Iterative Tarjan lowpoint from node 0.
  std::vector<int> disc(static_cast<std::size_t>(g.n), -1), low(static_cast<std::size_t>(g.n), 0);
  std::vector<std::size_t> it(static_cast<std::size_t>(g.n), 0);
  std::vector<int> parent(static_cast<std::size_t>(g.n), -1);
  int timer = 0, root_children = 0;
  std::vector<int> stack{0};
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    int u = stack.back();
    auto uu = static_cast<std::size_t>(u);
    if (it[uu] < g.adj[uu].size()) {
      int w = g.adj[uu][it[uu]++];
      auto ww = static_cast<std::size_t>(w);
      if (disc[ww] == -1) {
        parent[ww] = u;
        disc[ww] = low[ww] = timer++;
        if (u == 0) ++root_children;
        stack.push_back(w);
      } else if (w != parent[uu]) {
        low[uu] = std::min(low[uu], disc[ww]);
      }
    } else {
      stack.pop_back();
      int p = parent[uu];
      if (p >= 0) {
        auto pp = static_cast<std::size_t>(p);
        low[pp] = std::min(low[pp], low[uu]);
        if (p != 0 && low[uu] >= disc[pp]) return false;
      }
    }
  }
  return root_children < 2;
}

bool is_k_connected(const Graph& g, int k) {
  if (k <= 0) return true;
  if (k == 1) return g.n >= 2 && is_connected(g);
  if (k == 2) return is_biconnected(g);
  if (g.n <= k) return false;
  return vertex_connectivity(g) >= k;
}

bool is_k_connected(const Hypergraph& h, int k) { return is_k_connected(incidence_as_graph(h), k); }

bool aligned_with(const std::vector<int>& path, const std::vector<int>& q) {
  int last = -1;
  for (int v : path) {
    auto pos = std::find(q.begin(), q.end(), v);
    if (pos == q.end()) continue;
    int p = static_cast<int>(pos - q.begin());
    if (p <= last) return false;
    last = p;
  }
  return true;
}

namespace {

bool simple_path_in(const Graph& g, const std::vector<int>& p) {
  if (p.empty()) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= g.n || seen[static_cast<std::size_t>(p[i])]) return false;
    seen[static_cast<std::size_t>(p[i])] = 1;
    if (i > 0 && !g.adjacent(p[i - 1], p[i])) return false;
  }
  return true;
}

class AlignedSearch {
 public:
  AlignedSearch(const Graph& g, const std::vector<int>& q, int z, std::uint64_t budget)
      : g_(g), z_(z), budget_(budget), qpos_(static_cast<std::size_t>(g.n), -1), used_(static_cast<std::size_t>(g.n), 0) {
    for (std::size_t i = 0; i < q.size(); ++i) qpos_[static_cast<std::size_t>(q[i])] = static_cast<int>(i);
    x_ = q.front();
    y_ = q.back();
  }

  AlignedPathsResult run() {
    p1_ = {x_};
    used_[static_cast<std::size_t>(x_)] = 1;
    if (!extend_p1(0)) throw PreconditionError("no aligned disjoint path pair exists");
    return result_;
  }

 private:
  void tick() {
    if (++expansions_ > budget_) throw BudgetExhausted("aligned_disjoint_paths budget exhausted");
  }

  bool extend_p1(int last_q) {
    tick();
    int u = p1_.back();
    if (u == z_) return search_p2();
    for (int w : g_.adj[static_cast<std::size_t>(u)]) {
      auto ww = static_cast<std::size_t>(w);
      if (used_[ww]) continue;
      int qp = qpos_[ww];
      if (qp >= 0 && qp <= last_q) continue;
      used_[ww] = 1;
      p1_.push_back(w);
      bool ok = extend_p1(qp >= 0 ? qp : last_q);
      p1_.pop_back();
      used_[ww] = 0;
      if (ok) return true;
    }
    return false;
  }

  bool search_p2() {
    p2_ = {x_};
    return extend_p2(0);
  }

  bool extend_p2(int last_q) {
    tick();
    int u = p2_.back();
    if (u == y_) {
      result_ = {p1_, p2_};
      return true;
    }
    for (int w : g_.adj[static_cast<std::size_t>(u)]) {
      auto ww = static_cast<std::size_t>(w);
      if (used_[ww]) continue;  // p1 nodes and p2 nodes so far
      int qp = qpos_[ww];
      if (qp >= 0 && qp <= last_q) continue;
      used_[ww] = 1;
      p2_.push_back(w);
      bool ok = extend_p2(qp >= 0 ? qp : last_q);
      p2_.pop_back();
      used_[ww] = 0;
      if (ok) return true;
    }
    return false;
  }

  const Graph& g_;
  int x_ = 0, y_ = 0, z_;
  std::uint64_t budget_, expansions_ = 0;
  std::vector<int> qpos_;
  std::vector<char> used_;
  std::vector<int> p1_, p2_;
  AlignedPathsResult result_;
};

}  // namespace

bool check_aligned_paths(const Graph& g, const std::vector<int>& q, int z, const AlignedPathsResult& res) {
  if (q.empty() || !simple_path_in(g, res.p1) || !simple_path_in(g, res.p2)) return false;
  int x = q.front(), y = q.back();
  if (res.p1.front() != x || res.p1.back() != z || res.p2.front() != x || res.p2.back() != y) return false;
  for (int v : res.p1)
    if (v != x && std::find(res.p2.begin(), res.p2.end(), v) != res.p2.end()) return false;
  return aligned_with(res.p1, q) && aligned_with(res.p2, q);
}

AlignedPathsResult aligned_disjoint_paths(const Graph& g, const std::vector<int>& q, int z, std::uint64_t budget) {
  if (!simple_path_in(g, q)) throw InputError("q is not a simple path of the graph");
  if (z < 0 || z >= g.n) throw InputError("z out of range");
  if (z == q.back()) throw InputError("z must differ from the end of q");
  if (!is_biconnected(g)) throw PreconditionError("graph is not 2-connected");
  return AlignedSearch(g, q, z, budget).run();
}

}  // namespace berge
