#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <set>

#include "berge/connectivity.hpp"
#include "berge/constructions.hpp"
#include "berge/errors.hpp"
#include "berge/harness.hpp"
#include "oracles.hpp"

using namespace berge;

namespace {
Hypergraph complete(int n, int r) {
  std::vector<Edge> edges;
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    if (std::popcount(mask) == r) {
      Edge e;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1u) e.push_back(v);
      edges.push_back(e);
    }
  return Hypergraph(n, edges, r);
}
}  // namespace

TEST_CASE("sampler meets its targets") {
  auto h = random_2connected_rgraph(7, 3, 3, 1);
  CHECK(validate(h).empty());
  CHECK(h.r() == 3);
  CHECK(min_degree(h) >= 3);
  CHECK(is_k_connected(h, 2));
  CHECK(oracle::vertex_connectivity(incidence_as_graph(h)) >= 2);

  try {
    auto g = random_2connected_rgraph(6, 5, 3, 0);
    CHECK(min_degree(g) >= 3);
    CHECK(is_k_connected(g, 2));
  } catch (const PreconditionError&) {
    // acceptable: the target cannot be met
  }
  CHECK_THROWS_AS(random_2connected_rgraph(3, 3, 4, 0), InputError);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = sample_hypergraph({8, 4, 4, true, seed});
    CHECK(min_degree(g) >= 4);
    CHECK(is_k_connected(g, 2));
  }
  CHECK_THROWS_AS(sample_hypergraph({5, 3, 7, true, 0}), PreconditionError);
}

TEST_CASE("sampler is deterministic and varied") {
  CHECK(random_2connected_rgraph(8, 3, 4, 9) == random_2connected_rgraph(8, 3, 4, 9));
  std::set<std::uint64_t> hashes;
  for (std::uint64_t seed = 0; seed < 20; ++seed) hashes.insert(canonical_hash(random_2connected_rgraph(8, 3, 3, seed)));
  CHECK(hashes.size() >= 15);
}

TEST_CASE("verify_theorem examples") {
  auto h2 = gen_H2(3, 4, 8).graph;
  auto a = verify_theorem(h2, 3, TheoremId::theorem19);
  CHECK(a.hypotheses);
  CHECK(a.delta == 3);
  CHECK(a.bound == 6);
  CHECK(a.circumference == 6);
  CHECK(a.status == Status::holds);
  REQUIRE(a.witness);
  CHECK(validate_cycle(h2, *a.witness));

  auto kb = verify_theorem(gen_Kbip(4, 8).graph, 4, TheoremId::dirac);
  CHECK_FALSE(kb.hypotheses);
  CHECK(kb.status == Status::not_applicable);
  CHECK_FALSE(kb.note.empty());

  auto k5 = verify_theorem(complete(5, 3), 0, TheoremId::mainold2);
  CHECK(k5.hypotheses);
  CHECK(k5.bound == 5);
  CHECK(k5.status == Status::holds);

  // k > r + 1 is outside the theorem.
  CHECK(verify_theorem(h2, 5, TheoremId::theorem19).status == Status::not_applicable);

  auto jc = verify_theorem(complete(6, 4), 3, TheoremId::jackson_cor);
  CHECK(jc.hypotheses);
  CHECK(jc.status == Status::holds);

  auto tight = verify_theorem(h2, 3, TheoremId::theorem19, 3);
  CHECK((tight.status == Status::holds || tight.status == Status::inconclusive));
  CHECK(to_json(a)["status"] == "holds");
}

TEST_CASE("theorem names round trip") {
  for (auto id : {TheoremId::theorem19, TheoremId::dirac, TheoremId::jackson_cor, TheoremId::mainold2})
    CHECK(parse_theorem_id(theorem_name(id)) == id);
  CHECK_THROWS_AS(parse_theorem_id("nope"), InputError);
}

TEST_CASE("batch config parsing") {
  auto cfg = batch_config_from_json(
      nlohmann::json::parse(R"({"grid": {"n": {"from": 6, "to": 8}, "r": 3, "k": [3, 4]}, "samples": 5})"),
      TheoremId::theorem19);
  CHECK(cfg.n == std::vector<int>{6, 7, 8});
  CHECK(cfg.r == std::vector<int>{3});
  CHECK(cfg.k == std::vector<int>{3, 4});
  CHECK(cfg.samples == 5);

  auto def = batch_config_from_json(nlohmann::json::object(), TheoremId::dirac);
  CHECK(def.r == std::vector<int>{2});
  CHECK(def.n == std::vector<int>{6, 7, 8, 9, 10});

  CHECK_THROWS_AS(batch_config_from_json(nlohmann::json::parse(R"({"bogus": 1})"), TheoremId::dirac), InputError);
  CHECK_THROWS_AS(batch_config_from_json(nlohmann::json::parse(R"({"samples": -1})"), TheoremId::dirac), InputError);
}

TEST_CASE("batch reports are deterministic and thread independent") {
  BatchConfig cfg;
  cfg.theorem = TheoremId::theorem19;
  cfg.n = {6, 7};
  cfg.r = {3};
  cfg.k = {3, 4};
  cfg.samples = 15;
  cfg.seed = 5;
  cfg.heuristic = true;
  cfg.threads = 1;
  auto a = batch_verify(cfg).dump();
  cfg.threads = 3;
  auto b = batch_verify(cfg).dump();
  CHECK(a == b);

  auto j = nlohmann::json::parse(a);
  CHECK(j["summary"]["violations"] == 0);
  CHECK(j["summary"]["checked"].get<int>() > 0);
  for (const auto& cell : j["cells"]) {
    CHECK(cell["summary"]["violations"] == 0);
    const auto& recs = cell["records"];
    for (std::size_t i = 1; i < recs.size(); ++i) CHECK(recs[i - 1]["hash"] < recs[i]["hash"]);
  }
  cfg.seed = 6;
  CHECK(batch_verify(cfg).dump() != a);
}

TEST_CASE("dirac batch on graphs") {
  BatchConfig cfg;
  cfg.theorem = TheoremId::dirac;
  cfg.n = {6, 8};
  cfg.r = {2};
  cfg.k = {3};
  cfg.samples = 20;
  auto j = batch_verify(cfg);
  CHECK(j["summary"]["violations"] == 0);
  CHECK(j["summary"]["inconclusive"] == 0);
}

TEST_CASE("hash formatting") {
  CHECK(hash_hex(0) == "0000000000000000");
  CHECK(hash_hex(0xabcULL) == "0000000000000abc");
}
