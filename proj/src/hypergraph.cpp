#include "berge/hypergraph.hpp"

#include <algorithm>

#include "berge/errors.hpp"

namespace berge {

Hypergraph::Hypergraph(int n, std::vector<Edge> edges, int r)
    : n_(n), r_(r), edges_(std::move(edges)), incident_(static_cast<std::size_t>(std::max(n, 0))) {
  valid_ = n >= 0 && r >= 0;
  for (std::size_t j = 0; j < edges_.size(); ++j) {
    auto& e = edges_[j];
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) valid_ = false;
    if (r_ > 0 && static_cast<int>(e.size()) != r_) valid_ = false;
    for (Vertex v : e) {
      if (v < 0 || v >= n_) {
        valid_ = false;
        continue;
      }
      auto& inc = incident_[static_cast<std::size_t>(v)];
      if (inc.empty() || inc.back() != static_cast<EdgeId>(j)) inc.push_back(static_cast<EdgeId>(j));
    }
  }
}

bool Hypergraph::contains(EdgeId e, Vertex v) const {
  const auto& ed = edge(e);
  return std::binary_search(ed.begin(), ed.end(), v);
}

std::vector<Violation> validate(const Hypergraph& h) {
  std::vector<Violation> out;
  if (h.n() < 0) out.push_back({Violation::Kind::bad_header, -1, -1, "negative vertex count"});
  if (h.r() < 0) out.push_back({Violation::Kind::bad_header, -1, -1, "negative uniformity"});
  for (EdgeId j = 0; j < h.m(); ++j) {
    const auto& e = h.edge(j);
    const std::string tag = "edge " + std::to_string(j);
    if (h.r() > 0 && static_cast<int>(e.size()) != h.r())
      out.push_back({Violation::Kind::wrong_size, j, -1,
                     tag + " has " + std::to_string(e.size()) + " vertices, expected " + std::to_string(h.r())});
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] >= h.n())
        out.push_back({Violation::Kind::vertex_out_of_range, j, e[i],
                       "vertex " + std::to_string(e[i]) + " out of range in " + tag});
      if (i > 0 && e[i] == e[i - 1])
        out.push_back({Violation::Kind::duplicate_vertex, j, e[i],
                       "duplicate vertex " + std::to_string(e[i]) + " in " + tag});
    }
  }
  return out;
}

void require_valid(const Hypergraph& h) {
  if (h.is_valid()) return;
  auto v = validate(h);
  throw InputError(v.empty() ? "invalid hypergraph" : v.front().message);
}

static void check_vertex(const Hypergraph& h, Vertex v) {
  if (v < 0 || v >= h.n()) throw InputError("vertex " + std::to_string(v) + " out of range");
}

int degree(const Hypergraph& h, Vertex v) {
  check_vertex(h, v);
  return static_cast<int>(h.incident(v).size());
}

int min_degree(const Hypergraph& h) {
  if (h.n() < 1) throw InputError("min_degree of a hypergraph with no vertices");
  int best = h.m() + 1;
  for (Vertex v = 0; v < h.n(); ++v) best = std::min(best, degree(h, v));
  return best;
}

std::vector<Vertex> neighborhood(const Hypergraph& h, Vertex v) {
  check_vertex(h, v);
  std::vector<Vertex> out;
  for (EdgeId e : h.incident(v))
    for (Vertex u : h.edge(e))
      if (u != v) out.push_back(u);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IncidenceGraph incidence_graph(const Hypergraph& h) {
  require_valid(h);
  IncidenceGraph g;
  g.left = h.n();
  g.right = h.m();
  g.left_adj.resize(static_cast<std::size_t>(h.n()));
  for (Vertex v = 0; v < h.n(); ++v) g.left_adj[static_cast<std::size_t>(v)] = h.incident(v);
  g.right_adj.assign(h.edges().begin(), h.edges().end());
  return g;
}

Hypergraph from_incidence_graph(const IncidenceGraph& g, int r) {
  return Hypergraph(g.left, g.right_adj, r);
}

std::uint64_t canonical_hash(const Hypergraph& h) {
  std::vector<Edge> es(h.edges().begin(), h.edges().end());
  std::sort(es.begin(), es.end());
  std::uint64_t x = 0xcbf29ce484222325ULL;
  auto mix = [&x](std::uint64_t w) {
    for (int b = 0; b < 8; ++b) {
      x ^= (w >> (8 * b)) & 0xff;
      x *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(h.n()));
  mix(static_cast<std::uint64_t>(h.r()));
  for (const auto& e : es) {
    mix(e.size());
    for (Vertex v : e) mix(static_cast<std::uint64_t>(v));
  }
  return x;
}

std::vector<std::uint64_t> shadow_masks(const Hypergraph& h) {
  if (h.n() > 64) throw InputError("shadow_masks needs n <= 64");
  std::vector<std::uint64_t> out(static_cast<std::size_t>(h.n()), 0);
  for (const auto& e : h.edges()) {
    std::uint64_t m = 0;
    for (Vertex v : e) m |= 1ULL << v;
    for (Vertex v : e) out[static_cast<std::size_t>(v)] |= m & ~(1ULL << v);
  }
  return out;
}

}  // namespace berge
