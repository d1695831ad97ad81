#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "berge/berge.hpp"
#include "berge/constructions.hpp"
#include "berge/errors.hpp"
#include "berge/hypergraph.hpp"
#include "berge/io.hpp"

using namespace berge;

namespace {
Hypergraph complete(int n, int r) {
  std::vector<Edge> edges;
  std::vector<int> pick(static_cast<std::size_t>(r));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == r) {
      edges.push_back(pick);
      return;
    }
    for (int v = start; v < n; ++v) {
      pick[static_cast<std::size_t>(depth)] = v;
      rec(v + 1, depth + 1);
    }
  };
  rec(0, 0);
  return Hypergraph(n, edges, r);
}
}  // namespace

TEST_CASE("validate reports each broken invariant") {
  CHECK(validate(Hypergraph(3, {{0, 1, 2}}, 3)).empty());

  auto dup = validate(Hypergraph(3, {{0, 0, 1}}, 3));
  REQUIRE(dup.size() == 1);
  CHECK(dup[0].kind == Violation::Kind::duplicate_vertex);
  CHECK(dup[0].edge == 0);

  auto out = validate(Hypergraph(3, {{0, 1, 5}}, 3));
  REQUIRE(out.size() == 1);
  CHECK(out[0].kind == Violation::Kind::vertex_out_of_range);
  CHECK(out[0].vertex == 5);

  auto size = validate(Hypergraph(4, {{0, 1}}, 3));
  REQUIRE(size.size() == 1);
  CHECK(size[0].kind == Violation::Kind::wrong_size);

  CHECK_THROWS_AS(require_valid(Hypergraph(3, {{0, 1, 5}}, 3)), InputError);
  CHECK_FALSE(Hypergraph(3, {{0, 0, 1}}, 3).is_valid());
}

TEST_CASE("degree and minimum degree") {
  auto k5 = complete(5, 3);
  for (int v = 0; v < 5; ++v) CHECK(degree(k5, v) == 6);
  CHECK(min_degree(k5) == 6);

  auto h2 = gen_H2(3, 4, 8).graph;
  for (int v = 3; v < 8; ++v) CHECK(degree(h2, v) == 3);
  CHECK(min_degree(h2) == 3);
  CHECK(min_degree(gen_Hk(4, 4, 2).graph) == 2);
  CHECK(min_degree(Hypergraph(3, {{0, 1, 2}}, 3)) == 1);

  Hypergraph iso(4, {{0, 1, 2}}, 3);
  CHECK(degree(iso, 3) == 0);
  CHECK(min_degree(iso) == 0);
}

TEST_CASE("neighborhood") {
  CHECK(neighborhood(Hypergraph(3, {{0, 1, 2}}, 3), 0) == std::vector<Vertex>{1, 2});
  CHECK(neighborhood(complete(5, 3), 0) == std::vector<Vertex>{1, 2, 3, 4});
  // x = 0 meets y and every blade vertex used by some edge.
  auto hk = gen_Hk(3, 3, 2).graph;
  std::set<Vertex> expect;
  for (const auto& e : hk.edges())
    if (std::find(e.begin(), e.end(), 0) != e.end())
      for (Vertex v : e)
        if (v != 0) expect.insert(v);
  auto nb = neighborhood(hk, 0);
  CHECK(std::set<Vertex>(nb.begin(), nb.end()) == expect);
  CHECK(expect.count(1) == 1);
}

TEST_CASE("incidence graph") {
  auto one = incidence_graph(Hypergraph(2, {{0, 1}}, 2));
  CHECK(one.left == 2);
  CHECK(one.right == 1);
  CHECK(one.right_adj[0] == std::vector<Vertex>{0, 1});

  auto tri = incidence_graph(Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}}, 2));
  for (const auto& a : tri.left_adj) CHECK(a.size() == 2);
  for (const auto& a : tri.right_adj) CHECK(a.size() == 2);

  auto h2 = gen_H2(3, 4, 8).graph;
  auto ig = incidence_graph(h2);
  CHECK(ig.left == 8);
  CHECK(ig.right == 16);
  for (const auto& a : ig.right_adj) CHECK(a.size() == 3);
  CHECK(from_incidence_graph(ig, 3) == h2);
}

TEST_CASE("text format round trip and line-numbered errors") {
  Hypergraph h(5, {{0, 1, 2}, {2, 3, 4}, {0, 1, 2}}, 3);
  auto text = to_text(h, {"example"});
  CHECK(text.rfind("# example", 0) == 0);
  CHECK(parse_hypergraph(text) == h);
  CHECK(hypergraph_from_json(to_json(h)) == h);
  CHECK(parse_hypergraph(to_json(h).dump()) == h);

  auto line_of = [](const std::string& t) -> std::size_t {
    try {
      parse_hypergraph(t);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("# c\n3 1 3\n0 1 5\n") == 3);
  CHECK(line_of("3 1\n") == 1);
  CHECK(line_of("3 1 3\n0 1 x\n") == 2);
  CHECK(line_of("3 2 3\n0 1 2\n") >= 2);
  CHECK(line_of("4 1 3\n0 1\n") == 2);
  CHECK_THROWS_AS(parse_hypergraph(std::string("{\"n\": 3, \"edges\": [[0,1,9]]}")), ParseError);
  CHECK_THROWS_AS(read_hypergraph_file("/nonexistent/file.txt"), InputError);
}

TEST_CASE("cycle and path validation") {
  Hypergraph tri(3, {{0, 1}, {1, 2}, {0, 2}}, 2);
  CHECK(validate_cycle(tri, {{0, 1, 2}, {0, 1, 2}}));
  CHECK_FALSE(validate_cycle(tri, {{0, 1, 2}, {0, 0, 1}}));
  CHECK_FALSE(validate_cycle(tri, {{0, 1, 2}, {1, 0, 2}}));

  // Two parallel copies of an edge give a 2-cycle.
  Hypergraph par(2, {{0, 1}, {0, 1}}, 2);
  CHECK(validate_cycle(par, {{0, 1}, {0, 1}}));
  CHECK_FALSE(validate_cycle(par, {{0, 1}, {0, 0}}));

  // In H_k(3,3,2) the only defining pair available is x, y; every blade
  // vertex lies in exactly one edge, so no cycle can visit one.
  auto hk = gen_Hk(3, 3, 2).graph;
  BergeCycle xy{{0, 1}, {0, 1}};
  CHECK(validate_cycle(hk, xy));

  Hypergraph p4(4, {{0, 1}, {1, 2}, {2, 3}}, 2);
  CHECK(validate_path(p4, {{0, 1, 2, 3}, {0, 1, 2}, PathKind::full}));
  CHECK_FALSE(validate_path(p4, {{0, 1, 3}, {0, 2}, PathKind::full}));
  CHECK(validate_path(p4, {{1, 2}, {0, 1}, PathKind::partial}));

  auto canon = canonical_rotation({{2, 0, 1}, {2, 0, 1}});
  CHECK(canon.vertices.front() == 0);
  CHECK(validate_cycle(tri, canon));
  auto j = to_json(canon);
  CHECK(cycle_from_json(j) == canon);
}

TEST_CASE("canonical hash is labelled and order independent") {
  Hypergraph a(4, {{0, 1, 2}, {1, 2, 3}}, 3);
  Hypergraph b(4, {{3, 2, 1}, {2, 1, 0}}, 3);
  Hypergraph c(4, {{0, 1, 3}, {1, 2, 3}}, 3);
  CHECK(canonical_hash(a) == canonical_hash(b));
  CHECK(canonical_hash(a) != canonical_hash(c));
}
