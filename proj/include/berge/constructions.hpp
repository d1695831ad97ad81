#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "berge/hypergraph.hpp"

namespace berge {

enum class Relation { equal, at_most };

struct Expected {
  std::optional<int> min_degree;
  std::optional<int> circumference;
  Relation circumference_relation = Relation::equal;
  std::optional<int> connectivity;  // "is at least this connected"
};

struct ConstructionSpec {
  std::string name;
  std::map<std::string, int> parameters;
  Expected expected;
  std::map<std::string, int> extra;  // construction-specific figures (e.g. a cycle lower bound)
  std::vector<std::string> warnings;
};

struct Construction {
  Hypergraph graph;
  ConstructionSpec spec;
};

// x = 0, y = 1, blade A_i occupies 2+(i-1)(r-1) .. 2+i(r-1)-1.
// Edge e_{i,j} = (A_i - a_{i,j}) + {x, y} for j = 1..k-1, listed blade by blade.
Construction gen_Hk(int r, int k, int m);

// x = 0, y = 1, V_i occupies 2+(i-1)(k-2) .. ; all r-subsets of each V_i + {x, y}.
Construction gen_H1(int r, int k, int q);

// X = 0..k-2, Y = k-1..n-1; all r-subsets meeting Y at most once, in lexicographic order.
Construction gen_H2(int r, int k, int n);

// Blocks in order: the (a'-b)-part, the a-part, the b-part, the (b'-a)-part.
Construction gen_G3(int a, int b, int a_prime, int b_prime);

// X = 0..k-2 against Y = k-1..n-1.
Construction gen_Kbip(int k, int n);

nlohmann::json to_json(const ConstructionSpec& s);

}  // namespace berge
