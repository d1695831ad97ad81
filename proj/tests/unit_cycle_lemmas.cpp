#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "berge/cycle_lemmas.hpp"
#include "berge/errors.hpp"

using namespace berge;

namespace {
std::vector<int> members(unsigned mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i);
  return out;
}

int dist(int i, int j, int s) {
  int d = std::abs(i - j) % s;
  return std::min(d, s - d);
}

// Pairwise: equal or at distance >= q.
bool far_apart(const std::vector<int>& a, const std::vector<int>& b, int q, int s) {
  for (int x : a)
    for (int y : b)
      if (x != y && dist(x, y, s) < q) return false;
  return true;
}
}  // namespace

TEST_CASE("circular distance") {
  CHECK(circular_distance(0, 4, 8) == 4);
  CHECK(circular_distance(1, 7, 8) == 2);
  CHECK(circular_distance(3, 3, 5) == 0);
}

TEST_CASE("hypothesis examples") {
  CHECK(literal_hypotheses({8, {0, 4}, {0, 4}, {}, {}, 4, 0}, ClaimId::ver_new));
  CHECK_FALSE(literal_hypotheses({6, {0}, {1}, {}, {}, 2, 0}, ClaimId::ver_new));
  // e_8 = v_8 v_9 and v_9 is at distance 3 from v_0.
  CHECK_FALSE(literal_hypotheses({12, {0}, {4, 8}, {}, {}, 4, 4}, ClaimId::ver_ed2));
  CHECK(literal_hypotheses({12, {0}, {4}, {}, {}, 4, 4}, ClaimId::ver_ed2));
}

TEST_CASE("bounds") {
  CHECK(claim_bound({8, {0, 4}, {0, 4}, {}, {}, 4, 0}, ClaimId::ver_new) == 8);
  CHECK(claim_bound({6, {0}, {3}, {}, {}, 2, 0}, ClaimId::ver_new) == 3);
  CHECK(claim_bound({9, {}, {4}, {0, 2}, {}, 2, 0}, ClaimId::ver_ed) == 7);
  CHECK_THROWS_AS(claim_bound({6, {0}, {1}, {}, {}, 2, 0}, ClaimId::ver_new), PreconditionError);
  CHECK_THROWS_AS(claim_bound({6, {9}, {1}, {}, {}, 2, 0}, ClaimId::ver_new), InputError);
  CHECK(parse_claim_id("ver-ed2") == ClaimId::ver_ed2);
  CHECK_THROWS_AS(parse_claim_id("nope"), InputError);
}

TEST_CASE("ver-new and ver-ed hold under naive enumeration") {
  for (int s = 3; s <= 9; ++s) {
    const unsigned full = (1u << s) - 1;
    for (unsigned a = 1; a <= full; ++a)
      for (unsigned b = 1; b <= full; ++b)
        for (int q = 2; q <= s; ++q) {
          auto A = members(a), B = members(b);
          if (!far_apart(A, B, q, s)) continue;
          CycleConfig cfg{s, A, B, {}, {}, q, 0};
          REQUIRE(check_hypotheses(cfg, ClaimId::ver_new));
          const int bound = a == b ? q * static_cast<int>(A.size())
                                   : static_cast<int>(A.size() + B.size()) + 2 * q - 3;
          CHECK(claim_bound(cfg, ClaimId::ver_new) == bound);
          CHECK(s >= bound);
          if (s == bound && a != b) CHECK(((a & b) == a || (a & b) == b));
        }
  }
  for (int s = 3; s <= 9; ++s) {
    const unsigned full = (1u << s) - 1;
    for (unsigned i = 1; i <= full; ++i) {
      auto I = members(i);
      if (!far_apart(I, I, 2, s)) continue;
      for (unsigned b = 1; b <= full; ++b)
        for (int q = 1; q <= s; ++q) {
          auto B = members(b);
          bool ok = true;
          for (int e : B)
            for (int v : I) ok = ok && dist(v, e, s) >= q && dist(v, (e + 1) % s, s) >= q;
          if (!ok) continue;
          CycleConfig cfg{s, {}, B, I, {}, q, 0};
          REQUIRE(literal_hypotheses(cfg, ClaimId::ver_ed));
          CHECK(s >= 2 * static_cast<int>(I.size()) + static_cast<int>(B.size()) + 2 * (q - 1));
        }
    }
  }
}

TEST_CASE("exhaustive suite") {
  auto r = verify_claims_exhaustive(8);
  CHECK(r["total_violations"] == 0);
  for (ClaimId id : all_claims()) {
    const auto& c = r["claims"][std::string(claim_name(id))];
    CHECK(c["configurations"].get<std::uint64_t>() > 0);
    CHECK(c["violations"] == 0);
  }
  CHECK(r["claims"]["ver-new"]["equality_cases"].get<std::uint64_t>() > 0);
  CHECK_THROWS_AS(verify_claims_exhaustive(2), InputError);
}

TEST_CASE("long segment") {
  BergeCycle c7{{0, 1, 2, 3, 4, 5, 6}, {0, 1, 2, 3, 4, 5, 6}};
  auto seg = long_segment(c7, {Anchor::Kind::edge, 1}, {Anchor::Kind::edge, 4});
  CHECK(seg.size() >= 4);
  CHECK(long_segment_guarantee(7, Anchor::Kind::edge, Anchor::Kind::edge) == 4);

  BergeCycle c6{{0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5}};
  CHECK(long_segment(c6, {Anchor::Kind::vertex, 1}, {Anchor::Kind::vertex, 4}).size() >= 4);
  CHECK(long_segment_guarantee(6, Anchor::Kind::vertex, Anchor::Kind::vertex) == 4);

  BergeCycle c4{{0, 1, 2, 3}, {0, 1, 2, 3}};
  CHECK(long_segment(c4, {Anchor::Kind::vertex, 1}, {Anchor::Kind::vertex, 2}) == std::vector<Vertex>{1, 0, 3, 2});
  CHECK(long_segment_guarantee(5, Anchor::Kind::vertex, Anchor::Kind::edge) == 3);
  CHECK_THROWS_AS(long_segment(c4, {Anchor::Kind::vertex, 9}, {Anchor::Kind::vertex, 2}), InputError);
}

TEST_CASE("expanding sets and no2/no3") {
  // C_6 on 0..5, a chord-like edge g = {0,2,4}, u = 6 and x = 7 off the cycle.
  Hypergraph h(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 2, 4}, {1, 6}, {3, 7}, {5, 7}});
  BergeCycle c{{0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5}};
  CHECK(is_expanding(h, c, 6, {0, 2, 4}).expanding);
  // N(x) on the cycle: {3, 5}, joined through x itself.
  CHECK(is_expanding(h, c, 6, {3, 5}).expanding);
  CHECK(is_expanding(h, c, 6, {1}).expanding);
  auto bad = is_expanding(h, c, 6, {1, 3});
  CHECK_FALSE(bad.expanding);
  CHECK(bad.failing_pair == std::pair<Vertex, Vertex>{1, 3});

  auto n3 = no3_bounds(h, c, 6, {0, 2, 4});
  CHECK(n3.b == 0);
  CHECK(n3.bound_i_holds);
  CHECK(n3.bound_ii_holds);
  CHECK(no2_holds(h, c, 6, {0, 2, 4}));
}
