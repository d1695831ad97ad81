#include "berge/cycle_lemmas.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>

#include "berge/errors.hpp"

namespace berge {

namespace {

using Mask = std::uint32_t;
constexpr int kMaxS = 16;

constexpr std::array<std::pair<ClaimId, std::string_view>, 6> kNames{{
    {ClaimId::ver_new, "ver-new"},
    {ClaimId::ed_new, "ed-new"},
    {ClaimId::consecpath2, "consecpath2"},
    {ClaimId::ver_ed, "ver-ed"},
    {ClaimId::ver_ed2, "ver-ed2"},
    {ClaimId::ver_ver, "ver-ver"},
}};

int pc(Mask m) { return std::popcount(m); }
bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

// Distance tables for one cycle length.
struct Ring {
  int s;
  Mask full;
  // near[q][i]: positions j with 0 < d(i, j) < q.
  std::vector<std::vector<Mask>> near;
  // edge_near[q][i]: edges j whose ends are within distance < q of vertex i.
  std::vector<std::vector<Mask>> edge_near;

  explicit Ring(int s_) : s(s_), full(s_ == 32 ? ~Mask{0} : (Mask{1} << s_) - 1) {
    near.assign(static_cast<std::size_t>(s + 2), std::vector<Mask>(static_cast<std::size_t>(s), 0));
    edge_near = near;
    for (int q = 0; q <= s + 1; ++q)
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
          int d = circular_distance(i, j, s);
          if (d > 0 && d < q) near[static_cast<std::size_t>(q)][static_cast<std::size_t>(i)] |= Mask{1} << j;
          int de = std::min(d, circular_distance(i, (j + 1) % s, s));
          if (de < q) edge_near[static_cast<std::size_t>(q)][static_cast<std::size_t>(i)] |= Mask{1} << j;
        }
  }

  int clampq(int q) const { return std::clamp(q, 0, s + 1); }

  // Positions compatible with every member of A: equal or at distance >= q.
  Mask allowed(Mask A, int q) const {
    Mask bad = 0;
    for (Mask a = A; a; a &= a - 1) bad |= near[static_cast<std::size_t>(clampq(q))][static_cast<std::size_t>(std::countr_zero(a))];
    return full & ~bad;
  }
  // Edges whose ends are at distance >= q from every vertex of A.
  Mask far_edges(Mask A, int q) const {
    Mask bad = 0;
    for (Mask a = A; a; a &= a - 1)
      bad |= edge_near[static_cast<std::size_t>(clampq(q))][static_cast<std::size_t>(std::countr_zero(a))];
    return full & ~bad;
  }
  bool separated(Mask A, Mask B, int q) const { return subset(B, allowed(A, q)); }
  bool independent(Mask I) const { return separated(I, I, 2); }
};

struct MaskConfig {
  int s;
  Mask A = 0, B = 0, I = 0, F = 0;
  int q = 0, qp = 0;
};

enum class Extra { none, q_exceeds_s, q_prime_zero, I_inside_A_case_iii, contraction_overlap };

std::string_view extra_name(Extra e) {
  switch (e) {
    case Extra::q_exceeds_s: return "q_exceeds_s";
    case Extra::q_prime_zero: return "q_prime_zero";
    case Extra::I_inside_A_case_iii: return "I_inside_A_case_iii";
    case Extra::contraction_overlap: return "contraction_overlap";
    default: return "none";
  }
}

bool literal_mask(const Ring& R, const MaskConfig& c, ClaimId id) {
  switch (id) {
    case ClaimId::ver_new:
    case ClaimId::ed_new:
      return c.A && c.B && c.q >= 2 && R.separated(c.A, c.B, c.q);
    case ClaimId::consecpath2:
      return c.A && c.B && c.q >= 2 && !(c.F & (c.A | c.B)) && R.separated(c.A, c.B, c.q) &&
             R.separated(c.F, c.F | c.A | c.B, c.q);
    case ClaimId::ver_ed:
      return c.I && c.B && c.q >= 1 && R.independent(c.I) && subset(c.B, R.far_edges(c.I, c.q));
    case ClaimId::ver_ed2:
      return c.A && c.B && c.q >= 1 && c.qp >= c.q - 1 && subset(c.B, R.far_edges(c.A, c.qp)) &&
             R.separated(c.B, c.B, c.q);
    case ClaimId::ver_ver:
      return c.I && c.A && c.q >= 3 && R.independent(c.I) && R.separated(c.I, c.A, c.q);
  }
  return false;
}

Extra extra_failure(const MaskConfig& c, ClaimId id) {
  switch (id) {
    case ClaimId::ver_new:
    case ClaimId::ed_new:
      return c.q > c.s ? Extra::q_exceeds_s : Extra::none;
    case ClaimId::consecpath2:
      if (c.q > c.s) return Extra::q_exceeds_s;
      return c.q * pc(c.F) >= c.s ? Extra::contraction_overlap : Extra::none;
    case ClaimId::ver_ed:
      return Extra::none;
    case ClaimId::ver_ed2:
      return c.qp < 1 ? Extra::q_prime_zero : Extra::none;
    case ClaimId::ver_ver:
      if (c.q > c.s) return Extra::q_exceeds_s;
      // Case (iii) with I inside A: the induction on |A & I| runs out of I.
      return (!subset(c.A, c.I) && subset(c.I, c.A)) ? Extra::I_inside_A_case_iii : Extra::none;
  }
  return Extra::none;
}

int bound_mask(const MaskConfig& c, ClaimId id) {
  const int a = pc(c.A), b = pc(c.B), i = pc(c.I), f = pc(c.F), q = c.q;
  switch (id) {
    case ClaimId::ver_new:
    case ClaimId::ed_new:
      return c.A == c.B ? q * a : a + b + 2 * q - 3;
    case ClaimId::consecpath2:
      return (c.A == c.B ? q * a : a + b + 2 * q - 3) + q * f;
    case ClaimId::ver_ed:
      return 2 * i + b + 2 * (q - 1);
    case ClaimId::ver_ed2:
      return a + q * b + 2 * c.qp - q;
    case ClaimId::ver_ver:
      if (c.A == c.I) return q * i;
      if (subset(c.A, c.I)) return 2 * i + (q - 2) * (a + 1);
      return 2 * i + a + 2 * q - 3;
  }
  return 0;
}

// Claims whose part (ii) carries the equality condition "A in B or B in A".
bool has_equality_condition(ClaimId id) {
  return id == ClaimId::ver_new || id == ClaimId::ed_new || id == ClaimId::consecpath2;
}

Mask to_mask(const std::vector<int>& xs, int s, const char* what) {
  Mask m = 0;
  for (int x : xs) {
    if (x < 0 || x >= s) throw InputError(std::string("position out of range in ") + what);
    m |= Mask{1} << x;
  }
  return m;
}

MaskConfig to_masks(const CycleConfig& cfg) {
  if (cfg.s < 3 || cfg.s > 31) throw InputError("cycle length must be in [3, 31]");
  return {cfg.s,         to_mask(cfg.A, cfg.s, "A"), to_mask(cfg.B, cfg.s, "B"), to_mask(cfg.I, cfg.s, "I"),
          to_mask(cfg.F, cfg.s, "F"), cfg.q,         cfg.q_prime};
}

std::vector<int> bits(Mask m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

nlohmann::json config_json(const MaskConfig& c, ClaimId id) {
  nlohmann::json j{{"s", c.s}, {"q", c.q}};
  switch (id) {
    case ClaimId::ver_new:
    case ClaimId::ed_new:
      j["A"] = bits(c.A), j["B"] = bits(c.B);
      break;
    case ClaimId::consecpath2:
      j["A"] = bits(c.A), j["B"] = bits(c.B), j["F"] = bits(c.F);
      break;
    case ClaimId::ver_ed:
      j["I"] = bits(c.I), j["B"] = bits(c.B);
      break;
    case ClaimId::ver_ed2:
      j["A"] = bits(c.A), j["B"] = bits(c.B), j["q_prime"] = c.qp;
      break;
    case ClaimId::ver_ver:
      j["I"] = bits(c.I), j["A"] = bits(c.A);
      break;
  }
  return j;
}

constexpr std::size_t kExamples = 10;

struct ClaimTally {
  explicit ClaimTally(ClaimId i) : id(i) {}

  ClaimId id;
  std::uint64_t configurations = 0;
  std::uint64_t violations = 0;
  nlohmann::json violation_examples = nlohmann::json::array();
  std::uint64_t exceptions = 0;
  std::map<std::string, std::uint64_t> exception_counterexamples;
  nlohmann::json exception_examples = nlohmann::json::array();
  std::uint64_t equality_cases = 0;
  std::uint64_t equality_condition_failures = 0;
  nlohmann::json equality_examples = nlohmann::json::array();

  void record(const MaskConfig& c) {
    const int bound = bound_mask(c, id);
    if (Extra ex = extra_failure(c, id); ex != Extra::none) {
      ++exceptions;
      if (c.s < bound) {
        ++exception_counterexamples[std::string(extra_name(ex))];
        if (exception_examples.size() < kExamples) {
          auto j = config_json(c, id);
          j["bound"] = bound;
          j["class"] = extra_name(ex);
          exception_examples.push_back(j);
        }
      }
      return;
    }
    ++configurations;
    if (c.s < bound) {
      ++violations;
      if (violation_examples.size() < kExamples) {
        auto j = config_json(c, id);
        j["bound"] = bound;
        violation_examples.push_back(j);
      }
    }
    if (has_equality_condition(id) && c.A != c.B && c.s == bound) {
      ++equality_cases;
      if (!subset(c.A, c.B) && !subset(c.B, c.A)) {
        ++equality_condition_failures;
        ++violations;
      }
      if (equality_examples.size() < kExamples) equality_examples.push_back(config_json(c, id));
    }
  }

  nlohmann::json json() const {
    return {{"configurations", configurations},
            {"violations", violations},
            {"violation_examples", violation_examples},
            {"literal_exceptions",
             {{"configurations", exceptions},
              {"counterexamples_by_class", exception_counterexamples},
              {"examples", exception_examples}}},
            {"equality_cases", equality_cases},
            {"equality_condition_failures", equality_condition_failures},
            {"equality_examples", equality_examples}};
  }
};

// Nonempty submasks of m in increasing order of value.
template <class Fn>
void for_submasks(Mask m, Fn&& fn) {
  for (Mask b = m & (~m + 1); b; b = (b - m) & m) fn(b);
}

// Every configuration with the first listed set containing position 0 (each
// configuration is a rotation of such a rooted one).
void enumerate_ring(const Ring& R, std::map<ClaimId, ClaimTally>& t) {
  const int s = R.s;
  const Mask rest = R.full & ~Mask{1};
  std::vector<std::vector<Mask>> self_sep(static_cast<std::size_t>(s + 2));
  for (int q = 1; q <= s + 1; ++q)
    for_submasks(R.full, [&](Mask B) {
      if (R.separated(B, B, q)) self_sep[static_cast<std::size_t>(q)].push_back(B);
    });

  for (Mask tail = 0;; tail = (tail - rest) & rest) {
    const Mask X = tail | 1;  // rooted first set
    for (int q = 2; q <= s + 1; ++q) {
      const Mask T = R.allowed(X, q);
      for_submasks(T, [&](Mask B) {
        t.at(ClaimId::ver_new).record({s, X, B, 0, 0, q, 0});
        t.at(ClaimId::ed_new).record({s, X, B, 0, 0, q, 0});
      });
      // consecpath2: F inside T - X, self-separated; B inside T, allowed by F, outside F.
      Mask fcand = T & ~X;
      auto with_f = [&](Mask F) {
        if (!R.separated(F, F, q)) return;
        Mask TB = T & R.allowed(F, q) & ~F;
        for_submasks(TB, [&](Mask B) { t.at(ClaimId::consecpath2).record({s, X, B, 0, F, q, 0}); });
      };
      with_f(0);
      for_submasks(fcand, with_f);
    }
    for (int q = 1; q <= s; ++q)
      for (int qp = std::max(0, q - 1); qp <= s; ++qp) {
        const Mask TE = R.far_edges(X, qp);
        for (Mask B : self_sep[static_cast<std::size_t>(q)])
          if (subset(B, TE)) t.at(ClaimId::ver_ed2).record({s, X, B, 0, 0, q, qp});
      }
    if (R.independent(X)) {
      for (int q = 1; q <= s; ++q) {
        const Mask TE = R.far_edges(X, q);
        for_submasks(TE, [&](Mask B) { t.at(ClaimId::ver_ed).record({s, 0, B, X, 0, q, 0}); });
      }
      for (int q = 3; q <= s + 1; ++q) {
        const Mask T = R.allowed(X, q);
        for_submasks(T, [&](Mask A) { t.at(ClaimId::ver_ver).record({s, A, 0, X, 0, q, 0}); });
      }
    }
    if (tail == rest) break;
  }
}

}  // namespace

ClaimId parse_claim_id(std::string_view name) {
  for (auto [id, nm] : kNames)
    if (nm == name) return id;
  throw InputError("unknown claim id '" + std::string(name) + "'");
}

std::string_view claim_name(ClaimId id) {
  for (auto [cid, nm] : kNames)
    if (cid == id) return nm;
  return "?";
}

const std::vector<ClaimId>& all_claims() {
  static const std::vector<ClaimId> ids{ClaimId::ver_new, ClaimId::ed_new,  ClaimId::consecpath2,
                                        ClaimId::ver_ed,  ClaimId::ver_ed2, ClaimId::ver_ver};
  return ids;
}

int circular_distance(int i, int j, int s) {
  int x = ((i - j) % s + s) % s;
  return std::min(x, s - x);
}

bool literal_hypotheses(const CycleConfig& cfg, ClaimId id) {
  auto c = to_masks(cfg);
  return literal_mask(Ring(cfg.s), c, id);
}

bool check_hypotheses(const CycleConfig& cfg, ClaimId id) {
  auto c = to_masks(cfg);
  return literal_mask(Ring(cfg.s), c, id) && extra_failure(c, id) == Extra::none;
}

int claim_bound(const CycleConfig& cfg, ClaimId id) {
  if (!check_hypotheses(cfg, id)) throw PreconditionError("hypotheses of " + std::string(claim_name(id)) + " do not hold");
  return bound_mask(to_masks(cfg), id);
}

nlohmann::json verify_claims_exhaustive(int max_s) {
  if (max_s < 3 || max_s > kMaxS) throw InputError("max_s must be in [3, " + std::to_string(kMaxS) + "]");
  std::map<ClaimId, ClaimTally> tallies;
  for (ClaimId id : all_claims()) tallies.emplace(id, ClaimTally(id));
  for (int s = 3; s <= max_s; ++s) enumerate_ring(Ring(s), tallies);
  nlohmann::json claims = nlohmann::json::object();
  std::uint64_t total = 0;
  for (ClaimId id : all_claims()) {
    claims[std::string(claim_name(id))] = tallies.at(id).json();
    total += tallies.at(id).violations;
  }
  return {{"max_s", max_s}, {"rooted_at", "position 0 in the first set"}, {"claims", claims}, {"total_violations", total}};
}

int long_segment_guarantee(int c, Anchor::Kind a, Anchor::Kind b) {
  int edges = (a == Anchor::Kind::edge) + (b == Anchor::Kind::edge);
  int extra = 2 - edges;  // vertex anchors add one each
  return (c + extra + 1) / 2;
}

std::vector<int> long_segment_positions(int c, Anchor::Kind ka, int ia, Anchor::Kind kb, int ib) {
  if (c < 2) throw InputError("cycle too short");
  if (ia < 0 || ia >= c || ib < 0 || ib >= c) throw InputError("anchor not on cycle");
  auto mod = [c](int x) { return ((x % c) + c) % c; };
  auto walk = [&](int from, int to, int step) {
    std::vector<int> out{from};
    for (int p = from; p != to;) out.push_back(p = mod(p + step));
    return out;
  };
  using K = Anchor::Kind;
  if (ka == K::edge && kb == K::vertex) {
    auto seg = long_segment_positions(c, kb, ib, ka, ia);
    std::reverse(seg.begin(), seg.end());
    return seg;
  }
  std::vector<int> fwd, bwd;
  if (ka == K::vertex && kb == K::vertex) {
    if (ia == ib) throw InputError("anchors must be distinct");
    fwd = walk(ia, ib, +1);
    bwd = walk(ia, ib, -1);
  } else if (ka == K::vertex) {
    // v_ia to e_ib = {v_ib, v_ib+1}, avoiding e_ib
    fwd = walk(ia, ib, +1);
    bwd = walk(ia, mod(ib + 1), -1);
  } else {
    if (ia == ib) throw InputError("anchors must be distinct");
    // e_ia to e_ib, using neither
    fwd = walk(mod(ia + 1), ib, +1);
    bwd = walk(ia, mod(ib + 1), -1);
  }
  return fwd.size() >= bwd.size() ? fwd : bwd;
}

std::vector<Vertex> long_segment(const BergeCycle& cycle, Anchor a, Anchor b) {
  auto locate = [&](Anchor x) {
    const auto& seq = x.kind == Anchor::Kind::vertex ? cycle.vertices : cycle.edges;
    auto it = std::find(seq.begin(), seq.end(), x.id);
    if (it == seq.end()) throw InputError("anchor not on cycle");
    return static_cast<int>(it - seq.begin());
  };
  auto pos = long_segment_positions(cycle.length(), a.kind, locate(a), b.kind, locate(b));
  std::vector<Vertex> out;
  for (int p : pos) out.push_back(cycle.vertices[static_cast<std::size_t>(p)]);
  return out;
}

namespace {

void require_cycle_context(const Hypergraph& h, const BergeCycle& c, Vertex u, const std::vector<Vertex>& w) {
  if (!validate_cycle(h, c)) throw InputError("not a Berge cycle of the hypergraph");
  if (u < 0 || u >= h.n()) throw InputError("u out of range");
  if (std::find(c.vertices.begin(), c.vertices.end(), u) != c.vertices.end())
    throw PreconditionError("u must lie outside the cycle");
  for (Vertex x : w)
    if (std::find(c.vertices.begin(), c.vertices.end(), x) == c.vertices.end())
      throw PreconditionError("w must be a subset of V(C)");
}

// Shortest connector in I_H avoiding cycle edges and, internally, V(C) + {u}.
std::optional<BergePath> connector(const Hypergraph& h, const std::vector<char>& blocked_vertex,
                                   const std::vector<char>& cycle_edge, Vertex from, Vertex to) {
  // nodes: vertex v -> v, edge e -> n + e
  const int n = h.n();
  std::vector<int> prev(static_cast<std::size_t>(n + h.m()), -1);
  std::deque<int> bfs{from};
  prev[static_cast<std::size_t>(from)] = from;
  while (!bfs.empty()) {
    int x = bfs.front();
    bfs.pop_front();
    if (x < n) {
      for (EdgeId e : h.incident(x)) {
        if (cycle_edge[static_cast<std::size_t>(e)] || prev[static_cast<std::size_t>(n + e)] != -1) continue;
        prev[static_cast<std::size_t>(n + e)] = x;
        bfs.push_back(n + e);
      }
    } else {
      for (Vertex v : h.edge(x - n)) {
        if (prev[static_cast<std::size_t>(v)] != -1) continue;
        if (v != to && blocked_vertex[static_cast<std::size_t>(v)]) continue;
        prev[static_cast<std::size_t>(v)] = x;
        if (v == to) {
          BergePath p;
          for (int y = to;;) {
            p.vertices.push_back(y);
            if (y == from) break;
            int e = prev[static_cast<std::size_t>(y)];
            p.edges.push_back(e - n);
            y = prev[static_cast<std::size_t>(e)];
          }
          std::reverse(p.vertices.begin(), p.vertices.end());
          std::reverse(p.edges.begin(), p.edges.end());
          return p;
        }
        bfs.push_back(v);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ExpandingResult is_expanding(const Hypergraph& h, const BergeCycle& c, Vertex u, const std::vector<Vertex>& w) {
  require_cycle_context(h, c, u, w);
  std::vector<char> blocked(static_cast<std::size_t>(h.n()), 0), cyc(static_cast<std::size_t>(h.m()), 0);
  for (Vertex v : c.vertices) blocked[static_cast<std::size_t>(v)] = 1;
  blocked[static_cast<std::size_t>(u)] = 1;
  for (EdgeId e : c.edges) cyc[static_cast<std::size_t>(e)] = 1;
  std::vector<Vertex> ws(w);
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  ExpandingResult res;
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = i + 1; j < ws.size(); ++j) {
      auto p = connector(h, blocked, cyc, ws[i], ws[j]);
      if (!p) {
        res.expanding = false;
        res.failing_pair = {ws[i], ws[j]};
        return res;
      }
      res.connectors.push_back({{ws[i], ws[j]}, *p});
    }
  return res;
}

namespace {

// Number of maximal runs of set positions on a cycle of length c; the whole
// cycle counts as zero runs.
int runs(const std::vector<char>& on) {
  const int c = static_cast<int>(on.size());
  int count = 0, set = 0;
  for (int i = 0; i < c; ++i) {
    set += on[static_cast<std::size_t>(i)];
    if (on[static_cast<std::size_t>(i)] && !on[static_cast<std::size_t>((i + c - 1) % c)]) ++count;
  }
  return set == c ? 0 : count;
}

}  // namespace

No3Result no3_bounds(const Hypergraph& h, const BergeCycle& c, Vertex u, const std::vector<Vertex>& w) {
  if (!is_expanding(h, c, u, w).expanding) throw PreconditionError("w is not expanding");
  const int len = c.length();
  std::vector<char> in_b(static_cast<std::size_t>(len), 0), in_w(static_cast<std::size_t>(len), 0);
  No3Result r;
  r.c = len;
  for (int j = 0; j < len; ++j) {
    in_b[static_cast<std::size_t>(j)] = h.contains(c.edges[static_cast<std::size_t>(j)], u);
    in_w[static_cast<std::size_t>(j)] =
        std::find(w.begin(), w.end(), c.vertices[static_cast<std::size_t>(j)]) != w.end();
    r.b += in_b[static_cast<std::size_t>(j)];
    r.w_size += in_w[static_cast<std::size_t>(j)];
  }
  r.q = runs(in_b);
  r.q_prime = runs(in_w);
  r.bound_i_holds = r.w_size <= len - (r.b + r.q) + 2;
  r.bound_ii_holds = r.b <= len - (r.w_size + r.q_prime) + 2;
  return r;
}

bool no2_holds(const Hypergraph& h, const BergeCycle& c, Vertex u, const std::vector<Vertex>& w) {
  require_cycle_context(h, c, u, w);
  const int len = c.length();
  int after = 0, before = 0;
  for (int j = 0; j < len; ++j) {
    if (std::find(w.begin(), w.end(), c.vertices[static_cast<std::size_t>(j)]) == w.end()) continue;
    after += h.contains(c.edges[static_cast<std::size_t>(j)], u);
    before += h.contains(c.edges[static_cast<std::size_t>((j + len - 1) % len)], u);
  }
  return after <= 1 && before <= 1;
}

}  // namespace berge
