#pragma once

#include <vector>

#include <json.hpp>

#include "berge/hypergraph.hpp"

namespace berge {

// v_0, e_0, v_1, ..., v_{c-1}, e_{c-1}, v_0 with {v_i, v_{i+1}} in e_i.
struct BergeCycle {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  int length() const noexcept { return static_cast<int>(vertices.size()); }
  friend bool operator==(const BergeCycle&, const BergeCycle&) = default;
};

enum class PathKind { full, partial };

// full:    u_0, f_0, u_1, ..., f_{l-1}, u_l      (edges[j] holds u_j and u_{j+1})
// partial: f_0, u_1, f_1, ..., f_{l-1}, u_l      (vertices = u_1..u_l, edges[0]
//          holds u_1, edges[j] holds vertices[j-1] and vertices[j])
struct BergePath {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
  PathKind kind = PathKind::full;

  int length() const noexcept { return static_cast<int>(edges.size()); }
  friend bool operator==(const BergePath&, const BergePath&) = default;
};

bool validate_cycle(const Hypergraph& h, const BergeCycle& c);
bool validate_path(const Hypergraph& h, const BergePath& p);

// Rotate/reflect so the minimum vertex comes first and v_1 < v_{c-1}.
BergeCycle canonical_rotation(const BergeCycle& c);

nlohmann::json to_json(const BergeCycle& c);
nlohmann::json to_json(const BergePath& p);
BergeCycle cycle_from_json(const nlohmann::json& j);
BergePath path_from_json(const nlohmann::json& j);

}  // namespace berge
