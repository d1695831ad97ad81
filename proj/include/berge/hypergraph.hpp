#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace berge {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;
using Edge = std::vector<Vertex>;

/**
 * A finite hypergraph on vertices 0..n-1 with an indexed edge family.
 *
 * Edges are stored sorted. Repeated edge sets are allowed and are distinct
 * members of the family (distinct edge ids). The declared uniformity r is 0
 * when edges of different sizes are allowed.
 *
 * Values are immutable after construction; an invalid edge list is kept
 * verbatim (apart from sorting) so that validate() can report it.
 */
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int n, std::vector<Edge> edges, int r = 0);

  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(edges_.size()); }
  int r() const noexcept { return r_; }

  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  // Edge ids containing v, ascending. Out-of-range entries of an invalid
  // hypergraph are not indexed.
  const std::vector<EdgeId>& incident(Vertex v) const { return incident_.at(static_cast<std::size_t>(v)); }

  bool contains(EdgeId e, Vertex v) const;
  bool is_valid() const noexcept { return valid_; }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 0;
  int r_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  bool valid_ = true;
};

struct Violation {
  enum class Kind { vertex_out_of_range, duplicate_vertex, wrong_size, bad_header };
  Kind kind;
  EdgeId edge = -1;
  Vertex vertex = -1;
  std::string message;
};

/// Every broken Hypergraph invariant, one entry per offending edge/vertex.
std::vector<Violation> validate(const Hypergraph& h);

/// Throws InputError naming the first violation.
void require_valid(const Hypergraph& h);

int degree(const Hypergraph& h, Vertex v);
int min_degree(const Hypergraph& h);
std::vector<Vertex> neighborhood(const Hypergraph& h, Vertex v);

/// Bipartite vertex/edge membership graph. Left nodes are vertices, right
/// nodes are edge ids.
struct IncidenceGraph {
  int left = 0;
  int right = 0;
  std::vector<std::vector<EdgeId>> left_adj;   // vertex -> edges containing it
  std::vector<std::vector<Vertex>> right_adj;  // edge -> its vertices
};

IncidenceGraph incidence_graph(const Hypergraph& h);
Hypergraph from_incidence_graph(const IncidenceGraph& g, int r = 0);

// 64-bit FNV-1a over (n, r, sorted list of sorted edges). Labelled, not an
// isomorphism invariant.
std::uint64_t canonical_hash(const Hypergraph& h);

// Pairs of vertices that share an edge, as per-vertex bitmasks. Requires n <= 64.
std::vector<std::uint64_t> shadow_masks(const Hypergraph& h);

}  // namespace berge
