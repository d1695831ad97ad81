#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "berge/constructions.hpp"
#include "berge/errors.hpp"
#include "berge/harness.hpp"
#include "berge/structures.hpp"
#include "oracles.hpp"

using namespace berge;

namespace {
BergeCycle seq_cycle(int c) {
  BergeCycle out;
  for (int i = 0; i < c; ++i) {
    out.vertices.push_back(i);
    out.edges.push_back(i);
  }
  return out;
}

oracle::Key key_of(const RankVector& r) { return {r.r1, {r.r2, r.r3, r.s4, r.r4}}; }

// Every reported item must be valid and strictly better than the input.
void check_moves(const Hypergraph& h, const Structure& s, Family fam) {
  const auto base = rank(h, s, fam);
  const int c = std::visit([](const auto& x) { return x.cycle.length(); }, s);
  for (const auto& mv : improvement_moves(h, s, fam)) {
    CHECK((mv.improved.has_value() || mv.longer.has_value()));
    if (mv.improved) {
      CHECK(validate_structure(h, *mv.improved));
      CHECK(compare(rank(h, *mv.improved, fam), base) > 0);
    }
    if (mv.longer) {
      CHECK(validate_cycle(h, *mv.longer));
      CHECK(mv.longer->length() > c);
    }
  }
}
}  // namespace

TEST_CASE("rank of hand-built lollipops") {
  // C_4 on 0..3; the path 3, 4, 5 uses edges padded with spare vertices 6, 7.
  Hypergraph h(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4, 6}, {4, 5, 7}});
  Lollipop lol{seq_cycle(4), {{3, 4, 5}, {4, 5}, PathKind::full}, LollipopKind::ordinary};
  REQUIRE(validate_structure(h, lol));
  CHECK(rank(h, lol) == RankVector{Family::lollipop, 4, 2, 0, 0, 0});

  Hypergraph h2(8, {{0, 1, 4, 5}, {1, 2}, {2, 3}, {0, 3}, {3, 4, 6}, {4, 5, 7}});
  CHECK(rank(h2, lol) == RankVector{Family::lollipop, 4, 2, 2, 0, 0});

  // Path edge inside V(P) - V(C) counts for r4.
  Hypergraph h3(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}, {4, 5}});
  CHECK(rank(h3, lol) == RankVector{Family::lollipop, 4, 2, 0, 0, 1});

  // p-lollipop hanging off e_1 = {1, 2, 4}.
  Hypergraph hp(6, {{0, 1}, {1, 2, 4}, {2, 3}, {0, 3}, {4, 5}});
  Lollipop p{seq_cycle(4), {{4, 5}, {1, 4}, PathKind::partial}, LollipopKind::partial};
  REQUIRE(validate_structure(hp, p));
  CHECK(rank(hp, p) == RankVector{Family::lollipop, 4, 2, 0, 0, 1});
  auto np = normalize(hp, p);
  CHECK(np.cycle.edges.back() == 1);

  Lollipop broken{seq_cycle(4), {{3, 0}, {3}, PathKind::full}, LollipopKind::ordinary};
  CHECK_FALSE(validate_structure(h3, broken));
  CHECK_THROWS_AS(normalize(h3, broken), InputError);
}

TEST_CASE("rank of pairs") {
  Hypergraph h(7, {{0, 1}, {1, 2}, {0, 2, 3}, {3, 4}, {4, 5}, {3, 5}, {5, 6}});
  DcpPair d{seq_cycle(3), {{3, 4}, {3}, PathKind::full}};
  REQUIRE(validate_structure(h, d));
  CHECK(rank(h, d) == RankVector{Family::dcp, 3, 2, 1, 0, 1});
  CHECK(rank_joint(h, d) == RankVector{Family::joint, 3, 2, 1, 0, 1});
  DccPair cc{seq_cycle(3), {{3, 4, 5}, {3, 4, 5}}};
  REQUIRE(validate_structure(h, cc));
  CHECK(rank(h, cc) == RankVector{Family::joint, 3, 3, 1, 1, 3});
  CHECK_THROWS_AS(rank(h, Structure{cc}, Family::dcp), InputError);
}

TEST_CASE("compare") {
  RankVector a{Family::lollipop, 5, 0, 0, 0, 0}, b{Family::lollipop, 4, 9, 9, 0, 9};
  CHECK(compare(a, b) == 1);
  CHECK(compare(b, a) == -1);
  CHECK(compare({Family::lollipop, 4, 2, 1, 0, 0}, {Family::lollipop, 4, 2, 0, 0, 9}) == 1);
  CHECK(compare({Family::lollipop, 4, 2, 0, 0, 0}, {Family::lollipop, 4, 2, 0, 0, 0}) == 0);
  CHECK(compare({Family::joint, 4, 2, 0, 1, 0}, {Family::joint, 4, 2, 0, 0, 5}) == 1);
  CHECK_THROWS_AS(compare(a, {Family::dcp, 5, 0, 0, 0, 0}), InputError);
}

TEST_CASE("enumerate_best examples") {
  auto c5 = Hypergraph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}});
  auto best = enumerate_best(c5, Family::lollipop);
  REQUIRE(best.rank);
  CHECK(best.rank->r1 == 5);
  CHECK(best.rank->r2 == 1);
  CHECK(best.exhaustive);

  // Triangle plus an isolated vertex: the path is that vertex alone.
  auto tri = Hypergraph(4, {{0, 1}, {1, 2}, {0, 2}});
  auto d = enumerate_best(tri, Family::dcp);
  REQUIRE(d.rank);
  CHECK(*d.rank == RankVector{Family::dcp, 3, 1, 0, 0, 0});
  // With no spare vertex there is no dcp-pair at all.
  CHECK_FALSE(enumerate_best(Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}}), Family::dcp).structure);

  auto k43 = Hypergraph(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, 3);
  auto kb = enumerate_best(k43, Family::lollipop);
  REQUIRE(kb.rank);
  CHECK(kb.rank->r1 == 4);

  auto tree = enumerate_best(Hypergraph(3, {{0, 1}, {1, 2}}), Family::lollipop);
  CHECK_FALSE(tree.structure);
}

TEST_CASE("enumerate_best agrees with brute-force enumeration") {
  std::mt19937_64 rng(99);
  int compared = 0;
  for (int trial = 0; trial < 160; ++trial) {
    const int n = 5 + trial % 3;
    const int r = 2 + trial % 2;
    const int m = 4 + static_cast<int>(rng() % 5);
    auto h = oracle::random_hypergraph(rng, n, m, r);
    struct Case {
      Family fam;
      std::optional<oracle::Key> expect;
    };
    for (const auto& [fam, expect] : {Case{Family::lollipop, oracle::best_lollipop(h)},
                                      Case{Family::dcp, oracle::best_pair(h, false)},
                                      Case{Family::joint, oracle::best_pair(h, true)}}) {
      auto got = enumerate_best(h, fam);
      REQUIRE(got.exhaustive);
      CHECK(got.rank.has_value() == expect.has_value());
      if (!got.rank || !expect) continue;
      ++compared;
      CHECK(key_of(*got.rank) == *expect);
      REQUIRE(got.structure);
      CHECK(validate_structure(h, *got.structure));
      CHECK(rank(h, *got.structure, fam) == *got.rank);
    }
  }
  CHECK(compared > 200);
}

TEST_CASE("extension move") {
  // Lollipop 3 -> 4 on C_4 with an unused edge {4, 5}.
  Hypergraph h(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}, {4, 5}});
  Lollipop lol{seq_cycle(4), {{3, 4}, {4}, PathKind::full}, LollipopKind::ordinary};
  auto moves = improvement_moves(h, lol, Family::lollipop);
  REQUIRE_FALSE(moves.empty());
  CHECK(moves.front().name == "m1");
  REQUIRE(moves.front().improved);
  CHECK(rank(h, *moves.front().improved, Family::lollipop).r2 == 2);
  check_moves(h, lol, Family::lollipop);
}

TEST_CASE("a path returning to the cycle yields a longer cycle") {
  // C_6 on 0..5 with the path 5, 6, 7 and an edge {7, 1}.
  Hypergraph h(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {5, 6}, {6, 7}, {1, 7}});
  Lollipop lol{seq_cycle(6), {{5, 6, 7}, {6, 7}, PathKind::full}, LollipopKind::ordinary};
  REQUIRE(validate_structure(h, lol));
  bool longer = false;
  for (const auto& mv : improvement_moves(h, lol, Family::lollipop))
    if (mv.longer) {
      longer = true;
      CHECK(validate_cycle(h, *mv.longer));
      CHECK(mv.longer->length() == 7);
    }
  CHECK(longer);
  check_moves(h, lol, Family::lollipop);
}

TEST_CASE("dcp closure into a dcc pair") {
  Hypergraph h(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  DcpPair d{seq_cycle(3), {{3, 4, 5}, {3, 4}, PathKind::full}};
  REQUIRE(validate_structure(h, d));
  bool closed = false;
  for (const auto& mv : improvement_moves(h, d, Family::joint))
    if (mv.name == "m8") {
      REQUIRE(mv.improved);
      CHECK(std::holds_alternative<DccPair>(*mv.improved));
      closed = true;
    }
  CHECK(closed);
  check_moves(h, d, Family::joint);
}

TEST_CASE("moves are sound and best structures admit no improvement") {
  std::mt19937_64 rng(3);
  int optima = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 5 + trial % 3;
    auto h = oracle::random_hypergraph(rng, n, 4 + static_cast<int>(rng() % 5), 3);
    for (Family fam : {Family::lollipop, Family::dcp, Family::joint}) {
      auto best = enumerate_best(h, fam);
      if (!best.structure) continue;
      ++optima;
      check_moves(h, *best.structure, fam);
      for (const auto& mv : improvement_moves(h, *best.structure, fam)) {
        CHECK_FALSE(mv.improved.has_value());
        if (mv.longer) CHECK((fam != Family::lollipop && mv.longer->length() == n));
      }
      for (const auto& alt : rerootings(h, *best.structure)) {
        CHECK(validate_structure(h, alt));
        CHECK(compare(rank(h, alt, fam), *best.rank) == 0);
      }
    }
  }
  CHECK(optima > 100);
}

TEST_CASE("S-sets") {
  Hypergraph h(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}, {4, 5}});
  Lollipop trivial{seq_cycle(4), {{3}, {}, PathKind::full}, LollipopKind::ordinary};
  auto t = s_sets(h, trivial);
  CHECK(t.s1.empty());
  CHECK(t.s2.empty());

  // u_2 = 5 lies in f_1 = {4, 5} only.
  Lollipop lol{seq_cycle(4), {{3, 4, 5}, {4, 5}, PathKind::full}, LollipopKind::ordinary};
  auto s = s_sets(h, lol);
  CHECK(s.s1.empty());
  CHECK(s.s2 == std::vector<Vertex>{4});

  // An unused edge {5, 3} puts u_0 in S_1.
  Hypergraph h2(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}, {4, 5}, {3, 5}});
  auto s2 = s_sets(h2, lol);
  CHECK(s2.s1 == std::vector<Vertex>{3});
  CHECK(s2.s2 == std::vector<Vertex>{4});
}

TEST_CASE("small-degree flags") {
  Hypergraph h(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}, {4, 5}});
  Lollipop lol{seq_cycle(4), {{3, 4, 5}, {4, 5}, PathKind::full}, LollipopKind::ordinary};
  CHECK_FALSE(smalldeg_flags(h, lol, 3).applicable);
  auto f = smalldeg_flags(h, lol, 2);
  CHECK(f.applicable);
  CHECK(f.path_degree == 1);
  CHECK(f.cycle_degree == 0);
  CHECK(f.i_holds);
  CHECK(f.iii_holds);
}

TEST_CASE("find_long_cycle") {
  std::vector<Edge> c6;
  for (int i = 0; i < 6; ++i) c6.push_back({std::min(i, (i + 1) % 6), std::max(i, (i + 1) % 6)});
  auto r = find_long_cycle(Hypergraph(6, c6, 2), 1);
  CHECK(r.cycle.length() == 6);

  auto h2 = gen_H2(3, 4, 8).graph;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto res = find_long_cycle(h2, seed);
    CHECK(res.cycle.length() == 6);
    CHECK(validate_cycle(h2, res.cycle));
    CHECK(std::is_sorted(res.trajectory.begin(), res.trajectory.end()));
    CHECK(res.trajectory.back() == res.cycle.length());
    CHECK(res.final_structure.contains("rank"));
  }
  CHECK_THROWS_AS(find_long_cycle(Hypergraph(4, {{0, 1}, {1, 2}, {1, 3}}, 2), 0), NoCycleError);

  // Same seed, same answer.
  auto a = find_long_cycle(gen_Hk(4, 4, 2).graph, 42);
  auto b = find_long_cycle(gen_Hk(4, 4, 2).graph, 42);
  CHECK(a.cycle == b.cycle);
  CHECK(a.trajectory == b.trajectory);
}

TEST_CASE("heuristic matches the exact circumference on sampled instances") {
  int exact = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto h = random_2connected_rgraph(7, 3, 3, seed);
    auto res = find_long_cycle(h, seed);
    CHECK(validate_cycle(h, res.cycle));
    exact += res.cycle.length() == oracle::circumference(h);
    ++total;
  }
  CHECK(exact * 100 >= total * 95);
}

TEST_CASE("JSON and family names") {
  CHECK(parse_family("dcc") == Family::joint);
  CHECK(parse_family("joint") == Family::joint);
  CHECK(family_name(Family::joint) == "dcc");
  CHECK_THROWS_AS(parse_family("x"), InputError);
  auto j = to_json(RankVector{Family::joint, 4, 1, 2, 1, 0});
  CHECK(j["s4"] == 1);
  CHECK_FALSE(to_json(RankVector{Family::dcp, 4, 1, 2, 0, 0}).contains("s4"));
}
