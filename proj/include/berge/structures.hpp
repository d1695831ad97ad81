#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "berge/berge.hpp"
#include "berge/hypergraph.hpp"
#include "berge/search.hpp"

namespace berge {

enum class LollipopKind { ordinary, partial };

// Normal form: an o-lollipop's path starts at the last cycle vertex
// (u_0 = v_c); a p-lollipop's path starts with the last cycle edge (f_0 = e_c).
struct Lollipop {
  BergeCycle cycle;
  BergePath path;
  LollipopKind kind = LollipopKind::ordinary;
  friend bool operator==(const Lollipop&, const Lollipop&) = default;
};

// Path P = u_1, f_1, ..., u_l (full Berge path, possibly a single vertex).
struct DcpPair {
  BergeCycle cycle;
  BergePath path;
  friend bool operator==(const DcpPair&, const DcpPair&) = default;
};

struct DccPair {
  BergeCycle cycle;
  BergeCycle second;
  friend bool operator==(const DccPair&, const DccPair&) = default;
};

using Structure = std::variant<Lollipop, DcpPair, DccPair>;

// lollipop: rules R1-R4 on lollipops; dcp: R1-R4 on dcp-pairs; joint: S1-S5
// on dcp- and dcc-pairs together.
enum class Family { lollipop, dcp, joint };

struct RankVector {
  Family family = Family::lollipop;
  int r1 = 0, r2 = 0, r3 = 0, s4 = 0, r4 = 0;
  friend bool operator==(const RankVector&, const RankVector&) = default;
};

bool validate_structure(const Hypergraph& h, const Structure& s);

// Rotates the cycle into normal form. Throws InputError if not a lollipop.
Lollipop normalize(const Hypergraph& h, Lollipop lol);

RankVector rank(const Hypergraph& h, const Lollipop& s);
RankVector rank(const Hypergraph& h, const DcpPair& s);  // family dcp
RankVector rank_joint(const Hypergraph& h, const DcpPair& s);
RankVector rank(const Hypergraph& h, const DccPair& s);  // family joint
RankVector rank(const Hypergraph& h, const Structure& s, Family family);

// Lexicographic in rule order; -1, 0, 1. Mixed families throw InputError.
int compare(const RankVector& a, const RankVector& b);

struct BestStructure {
  std::optional<Structure> structure;
  std::optional<RankVector> rank;
  bool exhaustive = true;
  std::uint64_t expansions = 0;
};

// Exhaustive best structure of the family. Intended for n up to about 10.
BestStructure enumerate_best(const Hypergraph& h, Family family, std::uint64_t budget = kDefaultBudget);

struct Move {
  std::string name;                     // m1 .. m8
  std::optional<Structure> improved;    // strictly better rank, same family
  std::optional<BergeCycle> longer;     // strictly longer cycle
};

// Strict improvements only, in catalog order m1, m8, m3, m2, m6, m5, m7; at
// most one item (the best) per move.
std::vector<Move> improvement_moves(const Hypergraph& h, const Structure& s, Family family);

// Rank-preserving re-rootings (m4) and path reversals.
std::vector<Structure> rerootings(const Hypergraph& h, const Structure& s);

struct SSets {
  std::vector<Vertex> s1, s2;
};
SSets s_sets(const Hypergraph& h, const Lollipop& lol);

// Corollary checks for a lollipop whose path has at least k edges; reported,
// not asserted, since they presuppose a counterexample setting.
struct SmallDegFlags {
  bool applicable = false;
  int path_degree = 0;       // edges of P containing u_l
  int outside_degree = 0;    // edges outside C and P containing u_l
  int cycle_degree = 0;      // edges of C - P containing u_l
  bool i_holds = true, ii_holds = true, iii_holds = true;
};
SmallDegFlags smalldeg_flags(const Hypergraph& h, const Lollipop& lol, int k);

struct LongCycleResult {
  BergeCycle cycle;
  std::vector<int> trajectory;  // best length after each improvement, non-decreasing
  int restarts = 0;
  nlohmann::json final_structure;  // last local optimum, with rank
};

// Heuristic: random DFS seed cycle, then lollipop and dcp local search over
// the move catalog with re-rooting diversification and restarts. Throws
// NoCycleError when H has no Berge cycle.
LongCycleResult find_long_cycle(const Hypergraph& h, std::uint64_t seed, int max_restarts = 32);

nlohmann::json to_json(const RankVector& r);
nlohmann::json to_json(const Hypergraph& h, const Structure& s, Family family);
std::string_view family_name(Family f);
Family parse_family(std::string_view name);

}  // namespace berge
