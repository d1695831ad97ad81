#include "berge/berge.hpp"

#include <algorithm>

#include "berge/errors.hpp"

namespace berge {

namespace {

bool in_range_distinct(const Hypergraph& h, const std::vector<Vertex>& vs, const std::vector<EdgeId>& es) {
  std::vector<Vertex> v(vs);
  std::vector<EdgeId> e(es);
  std::sort(v.begin(), v.end());
  std::sort(e.begin(), e.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) return false;
  if (std::adjacent_find(e.begin(), e.end()) != e.end()) return false;
  if (!v.empty() && (v.front() < 0 || v.back() >= h.n())) return false;
  if (!e.empty() && (e.front() < 0 || e.back() >= h.m())) return false;
  return true;
}

}  // namespace

bool validate_cycle(const Hypergraph& h, const BergeCycle& c) {
  const auto len = c.vertices.size();
  if (len < 2 || c.edges.size() != len) return false;
  if (!in_range_distinct(h, c.vertices, c.edges)) return false;
  for (std::size_t i = 0; i < len; ++i)
    if (!h.contains(c.edges[i], c.vertices[i]) || !h.contains(c.edges[i], c.vertices[(i + 1) % len])) return false;
  return true;
}

bool validate_path(const Hypergraph& h, const BergePath& p) {
  if (!in_range_distinct(h, p.vertices, p.edges)) return false;
  if (p.kind == PathKind::full) {
    if (p.vertices.size() != p.edges.size() + 1) return false;
    for (std::size_t j = 0; j < p.edges.size(); ++j)
      if (!h.contains(p.edges[j], p.vertices[j]) || !h.contains(p.edges[j], p.vertices[j + 1])) return false;
    return true;
  }
  if (p.edges.empty() || p.vertices.size() != p.edges.size()) return false;
  if (!h.contains(p.edges[0], p.vertices[0])) return false;
  for (std::size_t j = 1; j < p.edges.size(); ++j)
    if (!h.contains(p.edges[j], p.vertices[j - 1]) || !h.contains(p.edges[j], p.vertices[j])) return false;
  return true;
}

BergeCycle canonical_rotation(const BergeCycle& c) {
  const int len = c.length();
  if (len == 0) return c;
  auto at = [len](int i) { return static_cast<std::size_t>(((i % len) + len) % len); };
  int s = static_cast<int>(std::min_element(c.vertices.begin(), c.vertices.end()) - c.vertices.begin());
  BergeCycle fwd, bwd;
  for (int i = 0; i < len; ++i) {
    fwd.vertices.push_back(c.vertices[at(s + i)]);
    fwd.edges.push_back(c.edges[at(s + i)]);
    // reversed walk: v_s, e_{s-1}, v_{s-1}, e_{s-2}, ...
    bwd.vertices.push_back(c.vertices[at(s - i)]);
    bwd.edges.push_back(c.edges[at(s - i - 1)]);
  }
  auto key = [](const BergeCycle& x) { return std::tie(x.vertices, x.edges); };
  return key(bwd) < key(fwd) ? bwd : fwd;
}

nlohmann::json to_json(const BergeCycle& c) {
  return {{"length", c.length()}, {"vertices", c.vertices}, {"edges", c.edges}};
}

nlohmann::json to_json(const BergePath& p) {
  return {{"length", p.length()},
          {"vertices", p.vertices},
          {"edges", p.edges},
          {"kind", p.kind == PathKind::full ? "full" : "partial"}};
}

BergeCycle cycle_from_json(const nlohmann::json& j) {
  try {
    return {j.at("vertices").get<std::vector<Vertex>>(), j.at("edges").get<std::vector<EdgeId>>()};
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad cycle JSON: ") + e.what());
  }
}

BergePath path_from_json(const nlohmann::json& j) {
  try {
    BergePath p{j.at("vertices").get<std::vector<Vertex>>(), j.at("edges").get<std::vector<EdgeId>>(), PathKind::full};
    if (j.value("kind", std::string("full")) == "partial") p.kind = PathKind::partial;
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad path JSON: ") + e.what());
  }
}

}  // namespace berge
