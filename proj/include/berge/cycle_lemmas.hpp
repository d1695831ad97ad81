#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "berge/berge.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

// Counting claims about a graph cycle v_0, e_0, ..., v_{s-1}, e_{s-1}, v_0
// (0-based positions, e_i joins v_i and v_{i+1}).
enum class ClaimId { ver_new, ed_new, consecpath2, ver_ed, ver_ed2, ver_ver };

ClaimId parse_claim_id(std::string_view name);
std::string_view claim_name(ClaimId id);
const std::vector<ClaimId>& all_claims();

// Set roles per claim:
//   ver_new, ed_new   A, B        (vertex / edge positions)
//   consecpath2       A, B, F     (vertex positions)
//   ver_ed            I (vertices), B (edges)
//   ver_ed2           A (vertices), B (edges), q, q_prime
//   ver_ver           I, A        (vertices)
struct CycleConfig {
  int s = 0;
  std::vector<int> A, B, I, F;
  int q = 0;
  int q_prime = 0;
};

int circular_distance(int i, int j, int s);

// The claim's hypotheses exactly as stated.
bool literal_hypotheses(const CycleConfig& cfg, ClaimId id);

// Literal hypotheses plus the side conditions without which the claims have
// counterexamples (q <= s, q' >= 1, I not inside A in ver-ver(iii), q|F| < s).
bool check_hypotheses(const CycleConfig& cfg, ClaimId id);

// Lower bound on s from the applicable case. Throws PreconditionError when
// check_hypotheses fails.
int claim_bound(const CycleConfig& cfg, ClaimId id);

// Exhaustive check over every rooted configuration with s <= max_s.
nlohmann::json verify_claims_exhaustive(int max_s = 12);

struct Anchor {
  enum class Kind { vertex, edge };
  Kind kind;
  int id;  // vertex id or edge id of the cycle
};

// Guaranteed minimum size of the long segment for the anchor kinds.
int long_segment_guarantee(int c, Anchor::Kind a, Anchor::Kind b);

// Cycle positions of the longer connecting segment between two anchor
// positions, from the first anchor towards the second.
std::vector<int> long_segment_positions(int c, Anchor::Kind ka, int ia, Anchor::Kind kb, int ib);

// Vertex ids of the long segment of `cycle` between the anchors.
std::vector<Vertex> long_segment(const BergeCycle& cycle, Anchor a, Anchor b);

struct ExpandingResult {
  bool expanding = true;
  std::vector<std::pair<std::pair<Vertex, Vertex>, BergePath>> connectors;  // one per connected pair
  std::pair<Vertex, Vertex> failing_pair{-1, -1};
};

// Pairwise connector search: for each pair of w a Berge path with internal
// vertices outside V(C) + {u} and no cycle edges.
ExpandingResult is_expanding(const Hypergraph& h, const BergeCycle& c, Vertex u, const std::vector<Vertex>& w);

struct No3Result {
  int b = 0, q = 0, q_prime = 0, w_size = 0, c = 0;
  bool bound_i_holds = true;
  bool bound_ii_holds = true;
};

// b, q from B = cycle edges containing u; q' from runs of W. A set covering the
// whole cycle counts as zero runs.
No3Result no3_bounds(const Hypergraph& h, const BergeCycle& c, Vertex u, const std::vector<Vertex>& w);

// u lies in at most one edge of {e_j : v_j in W} and at most one of {e_{j-1} : v_j in W}.
bool no2_holds(const Hypergraph& h, const BergeCycle& c, Vertex u, const std::vector<Vertex>& w);

}  // namespace berge
