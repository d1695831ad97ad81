#include "berge/structures.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <limits>
#include <random>
#include <set>

#include "berge/errors.hpp"

namespace berge {

namespace {

using Mask = std::uint64_t;
constexpr Mask bit(Vertex v) { return Mask{1} << v; }

std::vector<char> vertex_flags(int n, const std::vector<Vertex>& vs) {
  std::vector<char> f(static_cast<std::size_t>(n), 0);
  for (Vertex v : vs) f[static_cast<std::size_t>(v)] = 1;
  return f;
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return false;
  return true;
}

int count_in(const Hypergraph& h, EdgeId e, const std::vector<char>& flags) {
  int k = 0;
  for (Vertex v : h.edge(e)) k += flags[static_cast<std::size_t>(v)];
  return k;
}

bool inside(const Hypergraph& h, EdgeId e, const std::vector<char>& flags) {
  return count_in(h, e, flags) == static_cast<int>(h.edge(e).size());
}

BergeCycle rotated(const BergeCycle& c, int start) {
  const int len = c.length();
  BergeCycle out;
  for (int i = 0; i < len; ++i) {
    const auto k = static_cast<std::size_t>((start + i) % len);
    out.vertices.push_back(c.vertices[k]);
    out.edges.push_back(c.edges[k]);
  }
  return out;
}

BergePath reversed(BergePath p) {
  std::reverse(p.vertices.begin(), p.vertices.end());
  std::reverse(p.edges.begin(), p.edges.end());
  return p;
}

// Chord rotation at vertex index t: keeps vertices[0..t], then runs from the
// last vertex back to vertices[t+1]. The edge joining vertices[t] and
// vertices[t+1] is dropped and g joins vertices[t] to the old end.
BergePath rotate_path(const BergePath& p, int t, EdgeId g) {
  const int off = p.kind == PathKind::partial ? 1 : 0;
  const int len = static_cast<int>(p.vertices.size());
  BergePath q;
  q.kind = p.kind;
  q.vertices.assign(p.vertices.begin(), p.vertices.begin() + t + 1);
  for (int i = len - 1; i > t; --i) q.vertices.push_back(p.vertices[static_cast<std::size_t>(i)]);
  q.edges.assign(p.edges.begin(), p.edges.begin() + t + off);
  q.edges.push_back(g);
  for (int i = len - 2; i > t; --i) q.edges.push_back(p.edges[static_cast<std::size_t>(i + off)]);
  return q;
}

EdgeId joining_edge(const BergePath& p, int t) {
  return p.edges[static_cast<std::size_t>(t + (p.kind == PathKind::partial ? 1 : 0))];
}

Lollipop trivial_lollipop(const BergeCycle& c) {
  Lollipop l;
  l.cycle = c;
  l.path.vertices = {c.vertices.back()};
  l.kind = LollipopKind::ordinary;
  return l;
}

// Vertices of the path that are off the cycle, in path order.
std::vector<Vertex> new_vertices(const Lollipop& l) {
  std::vector<Vertex> out;
  for (Vertex v : l.path.vertices)
    if (std::find(l.cycle.vertices.begin(), l.cycle.vertices.end(), v) == l.cycle.vertices.end()) out.push_back(v);
  return out;
}

std::vector<char> used_edges(const Hypergraph& h, const Structure& s) {
  std::vector<char> used(static_cast<std::size_t>(h.m()), 0);
  auto mark = [&](const std::vector<EdgeId>& es) {
    for (EdgeId e : es) used[static_cast<std::size_t>(e)] = 1;
  };
  std::visit(
      [&](const auto& x) {
        mark(x.cycle.edges);
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, DccPair>)
          mark(x.second.edges);
        else
          mark(x.path.edges);
      },
      s);
  return used;
}

std::vector<Vertex> structure_vertices(const Structure& s) {
  return std::visit(
      [](const auto& x) {
        std::vector<Vertex> vs = x.cycle.vertices;
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, DccPair>)
          vs.insert(vs.end(), x.second.vertices.begin(), x.second.vertices.end());
        else
          vs.insert(vs.end(), x.path.vertices.begin(), x.path.vertices.end());
        return vs;
      },
      s);
}

RankVector joint_like(const Hypergraph& h, const BergeCycle& c, const std::vector<Vertex>& pv,
                      const std::vector<EdgeId>& pe, Family fam, int s4) {
  const auto inP = vertex_flags(h.n(), pv);
  RankVector r{fam, c.length(), static_cast<int>(pv.size()), 0, s4, 0};
  for (EdgeId e : c.edges) r.r3 += count_in(h, e, inP);
  for (EdgeId f : pe) r.r4 += inside(h, f, inP);
  return r;
}

// ---------------------------------------------------------------------------
// Max-weight assignment of slots to distinct edges (Hungarian, rows <= cols).

constexpr long long kForbidden = 1'000'000'000'000LL;
constexpr long long kBig = 1 << 12;  // exceeds any r4

struct Assignment {
  long long weight = 0;
  std::vector<EdgeId> edges;
};

std::optional<Assignment> hungarian(const std::vector<std::vector<long long>>& cost, int cols) {
  const int rows = static_cast<int>(cost.size());
  if (rows == 0) return Assignment{};
  if (rows > cols) return std::nullopt;
  constexpr long long inf = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> u(static_cast<std::size_t>(rows + 1)), v(static_cast<std::size_t>(cols + 1));
  std::vector<int> p(static_cast<std::size_t>(cols + 1)), way(static_cast<std::size_t>(cols + 1));
  for (int i = 1; i <= rows; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<long long> minv(static_cast<std::size_t>(cols + 1), inf);
    std::vector<char> used(static_cast<std::size_t>(cols + 1), 0);
    do {
      used[static_cast<std::size_t>(j0)] = 1;
      const int i0 = p[static_cast<std::size_t>(j0)];
      long long delta = inf;
      int j1 = 0;
      for (int j = 1; j <= cols; ++j) {
        const auto uj = static_cast<std::size_t>(j);
        if (used[uj]) continue;
        const long long cur = cost[static_cast<std::size_t>(i0 - 1)][static_cast<std::size_t>(j - 1)] -
                              u[static_cast<std::size_t>(i0)] - v[uj];
        if (cur < minv[uj]) {
          minv[uj] = cur;
          way[uj] = j0;
        }
        if (minv[uj] < delta) {
          delta = minv[uj];
          j1 = j;
        }
      }
      for (int j = 0; j <= cols; ++j) {
        const auto uj = static_cast<std::size_t>(j);
        if (used[uj]) {
          u[static_cast<std::size_t>(p[uj])] += delta;
          v[uj] -= delta;
        } else {
          minv[uj] -= delta;
        }
      }
      j0 = j1;
    } while (p[static_cast<std::size_t>(j0)] != 0);
    do {
      const int j1 = way[static_cast<std::size_t>(j0)];
      p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
      j0 = j1;
    } while (j0 != 0);
  }
  Assignment a;
  a.edges.assign(static_cast<std::size_t>(rows), -1);
  for (int j = 1; j <= cols; ++j)
    if (p[static_cast<std::size_t>(j)] != 0) a.edges[static_cast<std::size_t>(p[static_cast<std::size_t>(j)] - 1)] = j - 1;
  for (int i = 0; i < rows; ++i) {
    const long long c = cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(a.edges[static_cast<std::size_t>(i)])];
    if (c >= kForbidden) return std::nullopt;
    a.weight -= c;
  }
  return a;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration.

enum class SlotKind { cycle, path, anchor };

struct Slot {
  Vertex a, b;
  SlotKind kind;
  Vertex extra = -1;  // anchor slots must also contain this vertex
};

struct Candidate {
  std::array<int, 4> key{};  // r2, r3, s4, r4
  std::vector<Vertex> cycle;
  int anchor = -1;
  bool partial = false;
  bool second_cycle = false;
  std::vector<Vertex> path;
  std::vector<EdgeId> edges;  // cycle slots, then path slots
};

class Enumerator {
 public:
  Enumerator(const Hypergraph& h, std::uint64_t budget) : h_(h), budget_(budget) {
    if (h.n() > 64) throw InputError("enumerate_best needs n <= 64");
    shadow_ = shadow_masks(h);
    for (EdgeId e = 0; e < h.m(); ++e) {
      Mask m = 0;
      for (Vertex v : h.edge(e)) m |= bit(v);
      emask_.push_back(m);
    }
  }

  std::uint64_t expansions = 0;

  void tick() {
    if (++expansions > budget_) throw BudgetExhausted("structure enumeration budget exhausted");
  }

  void each_skeleton(int len, const std::function<bool(const std::vector<Vertex>&)>& fn) {
    for_each_cycle_skeleton(h_, len, fn, budget_, expansions);
  }

  bool has_cycle_of_length(int len) {
    bool found = false;
    each_skeleton(len, [&](const std::vector<Vertex>&) {
      found = true;
      return false;
    });
    return found;
  }

  std::optional<Assignment> evaluate(const std::vector<Slot>& slots, Mask X) {
    tick();
    std::vector<std::vector<long long>> cost(slots.size(), std::vector<long long>(static_cast<std::size_t>(h_.m()), kForbidden));
    for (std::size_t i = 0; i < slots.size(); ++i) {
      const Slot& s = slots[i];
      const Mask need = bit(s.a) | bit(s.b) | (s.extra >= 0 ? bit(s.extra) : 0);
      for (EdgeId e : h_.incident(s.a)) {
        const Mask em = emask_[static_cast<std::size_t>(e)];
        if ((em & need) != need) continue;
        long long w = 0;
        if (s.kind == SlotKind::cycle) w = kBig * std::popcount(em & X);
        if (s.kind == SlotKind::path) w = (em & ~X) == 0 ? 1 : 0;
        cost[i][static_cast<std::size_t>(e)] = -w;
      }
    }
    return hungarian(cost, h_.m());
  }

  // Sequences starting with `path` extended through `avail`, visited in DFS order.
  void grow(std::vector<Vertex>& path, Mask X, Mask avail, const std::function<void(const std::vector<Vertex>&, Mask)>& visit) {
    visit(path, X);
    Mask nb = shadow_[static_cast<std::size_t>(path.back())] & avail & ~X;
    while (nb) {
      const Vertex w = std::countr_zero(nb);
      nb &= nb - 1;
      tick();
      path.push_back(w);
      grow(path, X | bit(w), avail, visit);
      path.pop_back();
    }
  }

  Mask shadow(Vertex v) const { return shadow_[static_cast<std::size_t>(v)]; }
  Mask emask(EdgeId e) const { return emask_[static_cast<std::size_t>(e)]; }

 private:
  const Hypergraph& h_;
  std::uint64_t budget_;
  std::vector<Mask> shadow_, emask_;
};

std::vector<Slot> cycle_slots(const std::vector<Vertex>& cyc) {
  std::vector<Slot> slots;
  const std::size_t c = cyc.size();
  for (std::size_t i = 0; i < c; ++i) slots.push_back({cyc[i], cyc[(i + 1) % c], SlotKind::cycle});
  return slots;
}

void offer(std::optional<Candidate>& best, Candidate cand, const Assignment& a, int s4) {
  cand.key = {static_cast<int>(cand.key[0]), static_cast<int>(a.weight / kBig), s4, static_cast<int>(a.weight % kBig)};
  cand.edges = a.edges;
  if (!best || cand.key > best->key) best = std::move(cand);
}

void best_lollipops(Enumerator& en, const Hypergraph& h, int c, std::optional<Candidate>& best) {
  en.each_skeleton(c, [&](const std::vector<Vertex>& cyc) {
    Mask onC = 0;
    for (Vertex v : cyc) onC |= bit(v);
    const Mask outside = (h.n() == 64 ? ~Mask{0} : bit(h.n()) - 1) & ~onC;
    const auto base = cycle_slots(cyc);
    for (int a = 0; a < c; ++a) {
      std::vector<Vertex> path{cyc[static_cast<std::size_t>(a)]};
      en.grow(path, 0, outside, [&](const std::vector<Vertex>& p, Mask X) {
        const int ell = static_cast<int>(p.size()) - 1;
        if (best && ell < best->key[0]) return;
        if (ell == 0 && (best || a != 0)) return;
        auto slots = base;
        for (std::size_t j = 0; j + 1 < p.size(); ++j) slots.push_back({p[j], p[j + 1], SlotKind::path});
        if (auto as = en.evaluate(slots, X)) {
          Candidate cand;
          cand.key[0] = ell;
          cand.cycle = cyc;
          cand.anchor = a;
          cand.path = p;
          offer(best, std::move(cand), *as, 0);
        }
      });
    }
    for (int a = 0; a < c; ++a) {
      const Vertex x = cyc[static_cast<std::size_t>(a)], y = cyc[static_cast<std::size_t>((a + 1) % c)];
      Mask starts = 0;
      for (EdgeId e : h.incident(x))
        if (h.contains(e, y)) starts |= en.emask(e) & outside;
      while (starts) {
        const Vertex u1 = std::countr_zero(starts);
        starts &= starts - 1;
        std::vector<Vertex> path{u1};
        en.grow(path, bit(u1), outside, [&](const std::vector<Vertex>& p, Mask X) {
          const int ell = static_cast<int>(p.size());
          if (best && ell < best->key[0]) return;
          auto slots = base;
          slots[static_cast<std::size_t>(a)].kind = SlotKind::anchor;
          slots[static_cast<std::size_t>(a)].extra = u1;
          for (std::size_t j = 0; j + 1 < p.size(); ++j) slots.push_back({p[j], p[j + 1], SlotKind::path});
          if (auto as = en.evaluate(slots, X)) {
            Candidate cand;
            cand.key[0] = ell;
            cand.cycle = cyc;
            cand.anchor = a;
            cand.partial = true;
            cand.path = p;
            offer(best, std::move(cand), *as, 0);
          }
        });
      }
    }
    return true;
  });
}

void best_pairs(Enumerator& en, const Hypergraph& h, int len, bool joint, std::optional<Candidate>& best) {
  en.each_skeleton(len, [&](const std::vector<Vertex>& cyc) {
    Mask onC = 0;
    for (Vertex v : cyc) onC |= bit(v);
    const Mask outside = (h.n() == 64 ? ~Mask{0} : bit(h.n()) - 1) & ~onC;
    const auto base = cycle_slots(cyc);
    for (Mask rest = outside; rest; rest &= rest - 1) {
      const Vertex u = std::countr_zero(rest);
      std::vector<Vertex> path{u};
      en.grow(path, bit(u), outside, [&](const std::vector<Vertex>& p, Mask X) {
        if (p.front() > p.back()) return;
        const int ell = static_cast<int>(p.size());
        if (best && ell < best->key[0]) return;
        auto slots = base;
        for (std::size_t j = 0; j + 1 < p.size(); ++j) slots.push_back({p[j], p[j + 1], SlotKind::path});
        if (auto as = en.evaluate(slots, X)) {
          Candidate cand;
          cand.key[0] = ell;
          cand.cycle = cyc;
          cand.path = p;
          offer(best, std::move(cand), *as, 0);
        }
      });
      if (!joint) continue;
      // second cycles with u as their minimum vertex
      const Mask above = outside & ~(bit(u + 1) - 1);
      std::vector<Vertex> seq{u};
      en.grow(seq, bit(u), above | bit(u), [&](const std::vector<Vertex>& p, Mask X) {
        const std::size_t l = p.size();
        if (l < 2 || !(en.shadow(p.back()) & bit(u))) return;
        if (l > 2 && p[1] > p.back()) return;
        if (best && static_cast<int>(l) < best->key[0]) return;
        auto slots = base;
        for (std::size_t j = 0; j < l; ++j) slots.push_back({p[j], p[(j + 1) % l], SlotKind::path});
        if (auto as = en.evaluate(slots, X)) {
          Candidate cand;
          cand.key[0] = static_cast<int>(l);
          cand.cycle = cyc;
          cand.path = p;
          cand.second_cycle = true;
          offer(best, std::move(cand), *as, 1);
        }
      });
    }
    return true;
  });
}

Structure build(const Candidate& cand, Family fam) {
  const int c = static_cast<int>(cand.cycle.size());
  BergeCycle cyc{cand.cycle, std::vector<EdgeId>(cand.edges.begin(), cand.edges.begin() + c)};
  const std::vector<EdgeId> rest(cand.edges.begin() + c, cand.edges.end());
  if (fam == Family::lollipop) {
    Lollipop l;
    l.cycle = rotated(cyc, (cand.anchor + 1) % c);
    l.path.vertices = cand.path;
    if (cand.partial) {
      l.kind = LollipopKind::partial;
      l.path.kind = PathKind::partial;
      l.path.edges.push_back(cyc.edges[static_cast<std::size_t>(cand.anchor)]);
    }
    l.path.edges.insert(l.path.edges.end(), rest.begin(), rest.end());
    return l;
  }
  if (cand.second_cycle) return DccPair{cyc, BergeCycle{cand.path, rest}};
  return DcpPair{cyc, BergePath{cand.path, rest, PathKind::full}};
}

// ---------------------------------------------------------------------------
// Local moves.

class MoveFinder {
 public:
  MoveFinder(const Hypergraph& h, const Structure& s, Family fam)
      : h_(h), s_(s), fam_(fam), base_(rank(h, s, fam)), used_(used_edges(h, s)) {
    onC_ = vertex_flags(h.n(), cycle().vertices);
    adj_.assign(static_cast<std::size_t>(h.n()) * static_cast<std::size_t>(h.n()), 0);
    for (const Edge& e : h.edges())
      for (Vertex a : e)
        for (Vertex b : e) adj_[idx(a, b)] = 1;
  }

  std::vector<Move> run() {
    std::vector<Move> out;
    push(out, "m1", extensions(s_));
    if (fam_ == Family::joint) push(out, "m8", closure());
    push(out, "m3", swaps());
    auto [m2, m6] = splices();
    push(out, "m2", m2);
    push(out, "m6", m6);
    push(out, "m5", chord_rotations());
    push(out, "m7", expanding());
    return out;
  }

  std::vector<Structure> reroots() const {
    std::vector<Structure> out;
    auto add = [&](Structure cand) {
      if (validate_structure(h_, cand) && compare(rank(h_, cand, fam_), base_) == 0) out.push_back(std::move(cand));
    };
    auto from_path = [&](const BergePath& p, auto wrap) {
      const int len = static_cast<int>(p.vertices.size());
      for (int t = 0; t + 2 < len; ++t) {
        const EdgeId g = joining_edge(p, t);
        if (h_.contains(g, p.vertices.back())) add(wrap(rotate_path(p, t, g)));
      }
    };
    if (const auto* l = std::get_if<Lollipop>(&s_)) {
      from_path(l->path, [&](BergePath q) { return Structure{Lollipop{l->cycle, std::move(q), l->kind}}; });
    } else if (const auto* d = std::get_if<DcpPair>(&s_)) {
      auto wrap = [&](BergePath q) { return Structure{DcpPair{d->cycle, std::move(q)}}; };
      if (d->path.vertices.size() > 1) add(wrap(reversed(d->path)));
      from_path(d->path, wrap);
      from_path(reversed(d->path), wrap);
    }
    return out;
  }

 private:
  struct Found {
    std::optional<Structure> s;
    RankVector r;
    std::optional<BergeCycle> longer;
  };

  std::size_t idx(Vertex a, Vertex b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(h_.n()) + static_cast<std::size_t>(b);
  }
  bool adjacent(Vertex a, Vertex b) const { return adj_[idx(a, b)] != 0; }
  const BergeCycle& cycle() const {
    return std::visit([](const auto& x) -> const BergeCycle& { return x.cycle; }, s_);
  }
  bool free_edge(EdgeId e) const { return !used_[static_cast<std::size_t>(e)]; }

  void consider(Found& f, Structure cand) const {
    if (!validate_structure(h_, cand)) return;
    if (auto* l = std::get_if<Lollipop>(&cand)) *l = normalize(h_, *l);
    const RankVector r = rank(h_, cand, fam_);
    if (compare(r, base_) <= 0) return;
    if (!f.s || compare(r, f.r) > 0) {
      f.s = std::move(cand);
      f.r = r;
    }
  }

  void consider_cycle(Found& f, const std::vector<Vertex>& seq) const {
    const int cur = f.longer ? f.longer->length() : cycle().length();
    if (static_cast<int>(seq.size()) <= cur) return;
    const std::size_t l = seq.size();
    for (std::size_t i = 0; i < l; ++i)
      if (!adjacent(seq[i], seq[(i + 1) % l])) return;
    if (auto es = assign_cycle_edges(h_, seq)) f.longer = BergeCycle{seq, *es};
  }

  static void push(std::vector<Move>& out, const char* name, const Found& f) {
    if (f.longer)
      out.push_back({name, std::nullopt, f.longer});
    else if (f.s)
      out.push_back({name, f.s, std::nullopt});
  }

  // m1: append a new vertex at the free end of the path.
  Found extensions(const Structure& from) const {
    Found f;
    const auto used = used_edges(h_, from);
    const auto onS = vertex_flags(h_.n(), structure_vertices(from));
    auto extend = [&](const BergePath& p, auto wrap) {
      const Vertex end = p.vertices.back();
      for (EdgeId g : h_.incident(end)) {
        if (used[static_cast<std::size_t>(g)]) continue;
        for (Vertex y : h_.edge(g)) {
          if (onS[static_cast<std::size_t>(y)]) continue;
          BergePath q = p;
          q.vertices.push_back(y);
          q.edges.push_back(g);
          consider(f, wrap(std::move(q)));
        }
      }
    };
    if (const auto* l = std::get_if<Lollipop>(&from)) {
      const bool trivial = l->kind == LollipopKind::ordinary && l->path.edges.empty();
      if (!trivial) {
        extend(l->path, [&](BergePath q) { return Structure{Lollipop{l->cycle, std::move(q), l->kind}}; });
      } else {
        // a trivial lollipop may sprout from any cycle vertex or cycle edge
        const int c = l->cycle.length();
        for (int a = 0; a < c; ++a) {
          const BergeCycle rc = rotated(l->cycle, (a + 1) % c);
          extend(BergePath{{rc.vertices.back()}, {}, PathKind::full},
                 [&](BergePath q) { return Structure{Lollipop{rc, std::move(q), LollipopKind::ordinary}}; });
          const EdgeId e = rc.edges.back();
          for (Vertex y : h_.edge(e))
            if (!onS[static_cast<std::size_t>(y)])
              consider(f, Lollipop{rc, BergePath{{y}, {e}, PathKind::partial}, LollipopKind::partial});
        }
      }
    } else if (const auto* d = std::get_if<DcpPair>(&from)) {
      auto wrap = [&](BergePath q) { return Structure{DcpPair{d->cycle, std::move(q)}}; };
      extend(d->path, wrap);
      extend(reversed(d->path), wrap);
    }
    return f;
  }

  // m8: close a dcp path into a second cycle.
  Found closure() const {
    Found f;
    const auto* d = std::get_if<DcpPair>(&s_);
    if (!d || d->path.vertices.size() < 2) return f;
    const Vertex a = d->path.vertices.front(), b = d->path.vertices.back();
    for (EdgeId g : h_.incident(a))
      if (free_edge(g) && h_.contains(g, b)) {
        BergeCycle second{d->path.vertices, d->path.edges};
        second.edges.push_back(g);
        consider(f, DccPair{d->cycle, std::move(second)});
      }
    return f;
  }

  // m3: replace one used edge by an unused one everywhere it occurs.
  Found swaps() const {
    Found f;
    auto sub = [](std::vector<EdgeId> es, EdgeId from, EdgeId to) {
      std::replace(es.begin(), es.end(), from, to);
      return es;
    };
    for (EdgeId e = 0; e < h_.m(); ++e) {
      if (free_edge(e)) continue;
      for (EdgeId g = 0; g < h_.m(); ++g) {
        if (!free_edge(g)) continue;
        Structure cand = std::visit(
            [&](auto x) -> Structure {
              x.cycle.edges = sub(x.cycle.edges, e, g);
              if constexpr (std::is_same_v<decltype(x), DccPair>)
                x.second.edges = sub(x.second.edges, e, g);
              else
                x.path.edges = sub(x.path.edges, e, g);
              return x;
            },
            s_);
        consider(f, std::move(cand));
      }
    }
    return f;
  }

  // Vertex sequences off the cycle that may be spliced in.
  std::vector<std::vector<Vertex>> segments() const {
    std::vector<std::vector<Vertex>> out;
    auto linear = [&](const std::vector<Vertex>& seq) {
      for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i; j < seq.size(); ++j) {
          std::vector<Vertex> s(seq.begin() + static_cast<long>(i), seq.begin() + static_cast<long>(j) + 1);
          out.push_back(s);
          if (s.size() > 1) {
            std::reverse(s.begin(), s.end());
            out.push_back(std::move(s));
          }
        }
    };
    if (const auto* l = std::get_if<Lollipop>(&s_)) {
      linear(new_vertices(*l));
    } else if (const auto* d = std::get_if<DcpPair>(&s_)) {
      linear(d->path.vertices);
    } else {
      const auto& cv = std::get<DccPair>(s_).second.vertices;
      const std::size_t l = cv.size();
      for (std::size_t start = 0; start < l; ++start)
        for (std::size_t len = 1; len <= l; ++len)
          for (int dir : {1, -1}) {
            std::vector<Vertex> s;
            for (std::size_t k = 0; k < len; ++k)
              s.push_back(cv[(start + l + static_cast<std::size_t>(dir) * k) % l]);
            out.push_back(std::move(s));
          }
    }
    return out;
  }

  // m2 inserts a segment between consecutive cycle vertices; m6 replaces a
  // cycle arc with a longer segment.
  std::pair<Found, Found> splices() const {
    Found m2, m6;
    const BergeCycle& C = cycle();
    const int c = C.length();
    for (const auto& seg : segments()) {
      const int sl = static_cast<int>(seg.size());
      for (int a = 0; a < c; ++a) {
        const Vertex va = C.vertices[static_cast<std::size_t>(a)];
        if (!adjacent(va, seg.front())) continue;
        for (int b = 0; b < c; ++b) {
          if (b == a) continue;
          const int kept = ((a - b) % c + c) % c + 1;
          if (kept + sl <= c) continue;
          const Vertex vb = C.vertices[static_cast<std::size_t>(b)];
          if (!adjacent(seg.back(), vb)) continue;
          std::vector<Vertex> seq;
          for (int k = 0; k < kept; ++k) seq.push_back(C.vertices[static_cast<std::size_t>((b + k) % c)]);
          seq.insert(seq.end(), seg.begin(), seg.end());
          consider_cycle(kept == c ? m2 : m6, seq);
        }
      }
    }
    return {m2, m6};
  }

  // m5: rotate the path about a chord from its end, keeping the result if
  // that alone or together with an extension improves the rank.
  Found chord_rotations() const {
    Found f;
    auto rotate_all = [&](const BergePath& p, auto wrap) {
      const int len = static_cast<int>(p.vertices.size());
      for (int t = 0; t + 2 < len; ++t)
        for (EdgeId g : h_.incident(p.vertices.back())) {
          if (!free_edge(g) || !h_.contains(g, p.vertices[static_cast<std::size_t>(t)])) continue;
          Structure cand = wrap(rotate_path(p, t, g));
          if (!validate_structure(h_, cand)) continue;
          consider(f, cand);
          const Found ext = extensions(cand);
          if (ext.s) consider(f, *ext.s);
        }
    };
    if (const auto* l = std::get_if<Lollipop>(&s_)) {
      rotate_all(l->path, [&](BergePath q) { return Structure{Lollipop{l->cycle, std::move(q), l->kind}}; });
    } else if (const auto* d = std::get_if<DcpPair>(&s_)) {
      auto wrap = [&](BergePath q) { return Structure{DcpPair{d->cycle, std::move(q)}}; };
      rotate_all(d->path, wrap);
      rotate_all(reversed(d->path), wrap);
    }
    return f;
  }

  // Shortest connector from a to b: internal vertices off the cycle and not
  // u, edges off the cycle.
  std::optional<std::vector<Vertex>> connector(Vertex a, Vertex b, Vertex u, const std::vector<char>& cycEdge) const {
    std::vector<Vertex> parent(static_cast<std::size_t>(h_.n()), -2);
    std::deque<Vertex> queue{a};
    parent[static_cast<std::size_t>(a)] = -1;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (EdgeId g : h_.incident(x)) {
        if (cycEdge[static_cast<std::size_t>(g)]) continue;
        for (Vertex y : h_.edge(g)) {
          if (y == b) {
            std::vector<Vertex> inner;
            for (Vertex z = x; z != a; z = parent[static_cast<std::size_t>(z)]) inner.push_back(z);
            std::reverse(inner.begin(), inner.end());
            return inner;
          }
          if (y == u || onC_[static_cast<std::size_t>(y)] || parent[static_cast<std::size_t>(y)] != -2) continue;
          parent[static_cast<std::size_t>(y)] = x;
          queue.push_back(y);
        }
      }
    }
    return std::nullopt;
  }

  // m7: u off the cycle in two cycle edges plus a connector between the
  // corresponding cycle vertices gives a longer cycle.
  Found expanding() const {
    Found f;
    const BergeCycle& C = cycle();
    const int c = C.length();
    std::vector<char> cycEdge(static_cast<std::size_t>(h_.m()), 0);
    for (EdgeId e : C.edges) cycEdge[static_cast<std::size_t>(e)] = 1;
    auto v = [&](int i) { return C.vertices[static_cast<std::size_t>(((i % c) + c) % c)]; };
    for (Vertex u = 0; u < h_.n(); ++u) {
      if (onC_[static_cast<std::size_t>(u)]) continue;
      std::vector<int> pos;
      for (int i = 0; i < c; ++i)
        if (h_.contains(C.edges[static_cast<std::size_t>(i)], u)) pos.push_back(i);
      for (std::size_t x = 0; x < pos.size(); ++x)
        for (std::size_t y = x + 1; y < pos.size(); ++y) {
          const int i = pos[x], j = pos[y];
          if (auto r = connector(v(i), v(j), u, cycEdge)) {
            std::vector<Vertex> seq;
            for (int k = 0; k <= i; ++k) seq.push_back(v(k));
            seq.insert(seq.end(), r->begin(), r->end());
            for (int k = j; k > i; --k) seq.push_back(v(k));
            seq.push_back(u);
            for (int k = j + 1; k < c; ++k) seq.push_back(v(k));
            consider_cycle(f, seq);
          }
          if (auto r = connector(v(i + 1), v(j + 1), u, cycEdge)) {
            std::vector<Vertex> seq;
            for (int k = 0; k <= i; ++k) seq.push_back(v(k));
            seq.push_back(u);
            for (int k = j; k > i; --k) seq.push_back(v(k));
            seq.insert(seq.end(), r->begin(), r->end());
            for (int k = j + 1; k < c; ++k) seq.push_back(v(k));
            consider_cycle(f, seq);
          }
        }
    }
    return f;
  }

  const Hypergraph& h_;
  const Structure& s_;
  Family fam_;
  RankVector base_;
  std::vector<char> used_, onC_, adj_;
};

void check_family(const Structure& s, Family fam) {
  const bool ok = std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Lollipop>) return fam == Family::lollipop;
        if constexpr (std::is_same_v<T, DcpPair>) return fam == Family::dcp || fam == Family::joint;
        if constexpr (std::is_same_v<T, DccPair>) return fam == Family::joint;
      },
      s);
  if (!ok) throw InputError("structure type does not belong to family " + std::string(family_name(fam)));
}

// ---------------------------------------------------------------------------
// Heuristic driver.

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool incidence_has_cycle(const Hypergraph& h) {
  std::vector<int> parent(static_cast<std::size_t>(h.n() + h.m()));
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (EdgeId e = 0; e < h.m(); ++e)
    for (Vertex v : h.edge(e)) {
      const int a = find(v), b = find(h.n() + e);
      if (a == b) return true;
      parent[static_cast<std::size_t>(a)] = b;
    }
  return false;
}

// Longest cycle met by a randomised DFS of I_H.
BergeCycle random_dfs_cycle(const Hypergraph& h, std::mt19937_64& rng) {
  const int N = h.n() + h.m();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(N));
  for (EdgeId e = 0; e < h.m(); ++e)
    for (Vertex v : h.edge(e)) {
      adj[static_cast<std::size_t>(v)].push_back(h.n() + e);
      adj[static_cast<std::size_t>(h.n() + e)].push_back(v);
    }
  for (auto& a : adj) std::shuffle(a.begin(), a.end(), rng);
  std::vector<int> order(static_cast<std::size_t>(h.n()));
  for (int i = 0; i < h.n(); ++i) order[static_cast<std::size_t>(i)] = i;
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<int> depth(static_cast<std::size_t>(N), -1);
  std::vector<char> done(static_cast<std::size_t>(N), 0);
  std::vector<int> best;
  for (int start : order) {
    if (depth[static_cast<std::size_t>(start)] != -1 || done[static_cast<std::size_t>(start)]) continue;
    std::vector<int> stack{start};
    std::vector<std::size_t> it{0};
    depth[static_cast<std::size_t>(start)] = 0;
    while (!stack.empty()) {
      const int x = stack.back();
      auto& k = it.back();
      const auto& nb = adj[static_cast<std::size_t>(x)];
      if (k == nb.size()) {
        done[static_cast<std::size_t>(x)] = 1;
        depth[static_cast<std::size_t>(x)] = -1;
        stack.pop_back();
        it.pop_back();
        continue;
      }
      const int y = nb[k++];
      if (stack.size() >= 2 && y == stack[stack.size() - 2]) continue;
      const int dy = depth[static_cast<std::size_t>(y)];
      if (dy >= 0) {
        if (stack.size() - static_cast<std::size_t>(dy) > best.size())
          best.assign(stack.begin() + dy, stack.end());
        continue;
      }
      if (done[static_cast<std::size_t>(y)]) continue;
      depth[static_cast<std::size_t>(y)] = static_cast<int>(stack.size());
      stack.push_back(y);
      it.push_back(0);
    }
  }
  if (best.empty()) throw NoCycleError("hypergraph has no Berge cycle");
  if (best.front() >= h.n()) std::rotate(best.begin(), best.begin() + 1, best.end());
  BergeCycle c;
  for (std::size_t i = 0; i < best.size(); i += 2) {
    c.vertices.push_back(best[i]);
    c.edges.push_back(best[i + 1] - h.n());
  }
  return c;
}

class Climber {
 public:
  explicit Climber(const Hypergraph& h) : h_(h) {}
  nlohmann::json last;

  // Runs local search from s; returns a longer cycle if one turns up.
  std::optional<BergeCycle> climb(Structure s, Family fam) {
    std::set<std::string> seen;
    while (true) {
      auto moves = improvement_moves(h_, s, fam);
      if (auto c = longest(moves)) return c;
      if (auto next = first_improved(moves)) {
        s = std::move(*next);
        continue;
      }
      bool moved = false;
      for (auto& alt : rerootings(h_, s)) {
        if (!seen.insert(to_json(h_, alt, fam).dump()).second) continue;
        auto alt_moves = improvement_moves(h_, alt, fam);
        if (auto c = longest(alt_moves)) return c;
        if (auto next = first_improved(alt_moves)) {
          s = std::move(*next);
          moved = true;
          break;
        }
      }
      if (!moved) {
        last = to_json(h_, s, fam);
        return std::nullopt;
      }
    }
  }

 private:
  static std::optional<BergeCycle> longest(const std::vector<Move>& moves) {
    std::optional<BergeCycle> best;
    for (const auto& m : moves)
      if (m.longer && (!best || m.longer->length() > best->length())) best = m.longer;
    return best;
  }
  static std::optional<Structure> first_improved(const std::vector<Move>& moves) {
    for (const auto& m : moves)
      if (m.improved) return m.improved;
    return std::nullopt;
  }
  const Hypergraph& h_;
};

}  // namespace

// ---------------------------------------------------------------------------

bool validate_structure(const Hypergraph& h, const Structure& s) {
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if (!validate_cycle(h, x.cycle)) return false;
        if constexpr (std::is_same_v<T, DccPair>) {
          return validate_cycle(h, x.second) && disjoint(x.cycle.vertices, x.second.vertices) &&
                 disjoint(x.cycle.edges, x.second.edges);
        } else if constexpr (std::is_same_v<T, DcpPair>) {
          return x.path.kind == PathKind::full && validate_path(h, x.path) && !x.path.vertices.empty() &&
                 disjoint(x.cycle.vertices, x.path.vertices) && disjoint(x.cycle.edges, x.path.edges);
        } else {
          if (!validate_path(h, x.path) || x.path.vertices.empty()) return false;
          const auto& cv = x.cycle.vertices;
          const auto& ce = x.cycle.edges;
          if (x.kind == LollipopKind::ordinary) {
            if (x.path.kind != PathKind::full) return false;
            if (std::find(cv.begin(), cv.end(), x.path.vertices[0]) == cv.end()) return false;
            const std::vector<Vertex> rest(x.path.vertices.begin() + 1, x.path.vertices.end());
            return disjoint(cv, rest) && disjoint(ce, x.path.edges);
          }
          if (x.path.kind != PathKind::partial) return false;
          if (std::find(ce.begin(), ce.end(), x.path.edges[0]) == ce.end()) return false;
          const std::vector<EdgeId> rest(x.path.edges.begin() + 1, x.path.edges.end());
          return disjoint(cv, x.path.vertices) && disjoint(ce, rest);
        }
      },
      s);
}

Lollipop normalize(const Hypergraph& h, Lollipop lol) {
  if (!validate_structure(h, lol)) throw InputError("not a lollipop");
  const auto& cyc = lol.cycle;
  const int c = cyc.length();
  int a = 0;
  if (lol.kind == LollipopKind::ordinary)
    a = static_cast<int>(std::find(cyc.vertices.begin(), cyc.vertices.end(), lol.path.vertices[0]) - cyc.vertices.begin());
  else
    a = static_cast<int>(std::find(cyc.edges.begin(), cyc.edges.end(), lol.path.edges[0]) - cyc.edges.begin());
  lol.cycle = rotated(cyc, (a + 1) % c);
  return lol;
}

RankVector rank(const Hypergraph& h, const Lollipop& s) {
  const auto pnew = new_vertices(s);
  const auto inP = vertex_flags(h.n(), pnew);
  RankVector r{Family::lollipop, s.cycle.length(), static_cast<int>(pnew.size()), 0, 0, 0};
  auto in_path = [&](EdgeId e) { return std::find(s.path.edges.begin(), s.path.edges.end(), e) != s.path.edges.end(); };
  auto in_cycle = [&](EdgeId e) { return std::find(s.cycle.edges.begin(), s.cycle.edges.end(), e) != s.cycle.edges.end(); };
  for (EdgeId e : s.cycle.edges)
    if (!in_path(e)) r.r3 += count_in(h, e, inP);
  for (EdgeId f : s.path.edges)
    if (!in_cycle(f)) r.r4 += inside(h, f, inP);
  return r;
}

RankVector rank(const Hypergraph& h, const DcpPair& s) {
  return joint_like(h, s.cycle, s.path.vertices, s.path.edges, Family::dcp, 0);
}

RankVector rank_joint(const Hypergraph& h, const DcpPair& s) {
  return joint_like(h, s.cycle, s.path.vertices, s.path.edges, Family::joint, 0);
}

RankVector rank(const Hypergraph& h, const DccPair& s) {
  return joint_like(h, s.cycle, s.second.vertices, s.second.edges, Family::joint, 1);
}

RankVector rank(const Hypergraph& h, const Structure& s, Family family) {
  check_family(s, family);
  if (const auto* d = std::get_if<DcpPair>(&s)) return family == Family::joint ? rank_joint(h, *d) : rank(h, *d);
  return std::visit([&](const auto& x) { return rank(h, x); }, s);
}

int compare(const RankVector& a, const RankVector& b) {
  if (a.family != b.family) throw InputError("cannot compare ranks of different families");
  const auto ka = std::tie(a.r1, a.r2, a.r3, a.s4, a.r4);
  const auto kb = std::tie(b.r1, b.r2, b.r3, b.s4, b.r4);
  return ka < kb ? -1 : (kb < ka ? 1 : 0);
}

BestStructure enumerate_best(const Hypergraph& h, Family family, std::uint64_t budget) {
  require_valid(h);
  BestStructure out;
  Enumerator en(h, budget);
  const auto circ = circumference(h, budget);
  en.expansions = circ.expansions;
  out.exhaustive = circ.exhaustive;
  std::optional<Candidate> best;
  int r1 = 0;
  try {
    if (family == Family::lollipop) {
      r1 = circ.length;
      if (r1 >= 2) best_lollipops(en, h, r1, best);
    } else {
      for (int len = std::min(circ.length, h.n() - 1); len >= 2 && r1 == 0; --len)
        if (en.has_cycle_of_length(len)) r1 = len;
      if (r1 >= 2) best_pairs(en, h, r1, family == Family::joint, best);
    }
  } catch (const BudgetExhausted&) {
    out.exhaustive = false;
  }
  out.expansions = en.expansions;
  if (best) {
    out.structure = build(*best, family);
    out.rank = rank(h, *out.structure, family);
  }
  return out;
}

std::vector<Move> improvement_moves(const Hypergraph& h, const Structure& s, Family family) {
  check_family(s, family);
  if (!validate_structure(h, s)) throw InputError("invalid structure");
  Structure norm = s;
  if (auto* l = std::get_if<Lollipop>(&norm)) *l = normalize(h, *l);
  return MoveFinder(h, norm, family).run();
}

std::vector<Structure> rerootings(const Hypergraph& h, const Structure& s) {
  if (!validate_structure(h, s)) throw InputError("invalid structure");
  Family fam = Family::lollipop;
  if (std::holds_alternative<DcpPair>(s)) fam = Family::dcp;
  if (std::holds_alternative<DccPair>(s)) fam = Family::joint;
  return MoveFinder(h, s, fam).reroots();
}

SSets s_sets(const Hypergraph& h, const Lollipop& input) {
  const Lollipop lol = normalize(h, input);
  const auto used = used_edges(h, lol);
  const auto& pv = lol.path.vertices;
  const auto& pe = lol.path.edges;
  const Vertex end = pv.back();
  SSets out;
  for (Vertex w : pv) {
    if (w == end) continue;
    for (EdgeId g : h.incident(end))
      if (!used[static_cast<std::size_t>(g)] && h.contains(g, w)) {
        out.s1.push_back(w);
        break;
      }
  }
  const bool partial = lol.kind == LollipopKind::partial;
  const int ell = static_cast<int>(pe.size());
  for (int m = 0; m < ell; ++m) {
    const Vertex um = partial ? (m == 0 ? lol.cycle.vertices.back() : pv[static_cast<std::size_t>(m - 1)])
                              : pv[static_cast<std::size_t>(m)];
    if (h.contains(pe[static_cast<std::size_t>(m)], end) &&
        std::find(out.s1.begin(), out.s1.end(), um) == out.s1.end())
      out.s2.push_back(um);
  }
  std::sort(out.s1.begin(), out.s1.end());
  std::sort(out.s2.begin(), out.s2.end());
  const Vertex u0 = lol.cycle.vertices.back();
  for (const auto* set : {&out.s1, &out.s2})
    for (Vertex w : *set)
      if (w != u0 && std::find(lol.cycle.vertices.begin(), lol.cycle.vertices.end(), w) != lol.cycle.vertices.end())
        throw std::logic_error("S-set meets the cycle outside u_0");
  return out;
}

SmallDegFlags smalldeg_flags(const Hypergraph& h, const Lollipop& lol, int k) {
  if (!validate_structure(h, lol)) throw InputError("not a lollipop");
  SmallDegFlags f;
  const auto& pe = lol.path.edges;
  const auto& ce = lol.cycle.edges;
  const Vertex end = lol.path.vertices.back();
  const auto used = used_edges(h, lol);
  for (EdgeId g : h.incident(end)) {
    const bool inP = std::find(pe.begin(), pe.end(), g) != pe.end();
    const bool inC = std::find(ce.begin(), ce.end(), g) != ce.end();
    f.path_degree += inP;
    f.cycle_degree += inC && !inP;
    f.outside_degree += !used[static_cast<std::size_t>(g)];
  }
  // applicability is measured by the number of path edges
  f.applicable = static_cast<int>(pe.size()) >= k;
  f.i_holds = f.path_degree <= k - 1;
  f.ii_holds = f.outside_degree <= 1 && (f.outside_degree < 1 || h.r() == k - 1);
  f.iii_holds = f.cycle_degree == 0;
  return f;
}

LongCycleResult find_long_cycle(const Hypergraph& h, std::uint64_t seed, int max_restarts) {
  require_valid(h);
  if (!incidence_has_cycle(h)) throw NoCycleError("hypergraph has no Berge cycle");
  int cyclic = 0, big = 0;
  for (Vertex v = 0; v < h.n(); ++v) cyclic += degree(h, v) >= 2;
  for (const Edge& e : h.edges()) big += e.size() >= 2;
  const int bound = std::min(cyclic, big);

  std::mt19937_64 rng(splitmix64(seed));
  LongCycleResult out;
  Climber climber(h);
  auto record = [&](const BergeCycle& c) {
    if (c.length() > out.cycle.length()) {
      out.cycle = c;
      out.trajectory.push_back(c.length());
    }
  };
  for (int restart = 0; restart < std::max(1, max_restarts); ++restart) {
    out.restarts = restart + 1;
    BergeCycle c = random_dfs_cycle(h, rng);
    record(c);
    while (c.length() < bound) {
      auto longer = climber.climb(trivial_lollipop(c), Family::lollipop);
      if (!longer) {
        std::vector<Vertex> outside;
        const auto onC = vertex_flags(h.n(), c.vertices);
        for (Vertex v = 0; v < h.n(); ++v)
          if (!onC[static_cast<std::size_t>(v)]) outside.push_back(v);
        std::shuffle(outside.begin(), outside.end(), rng);
        for (Vertex u : outside)
          if ((longer = climber.climb(DcpPair{c, BergePath{{u}, {}, PathKind::full}}, Family::joint))) break;
      }
      if (!longer) break;
      c = *longer;
      record(c);
    }
    if (out.cycle.length() >= bound) break;
  }
  out.cycle = canonical_rotation(out.cycle);
  out.final_structure = climber.last.is_null() ? to_json(h, trivial_lollipop(out.cycle), Family::lollipop) : climber.last;
  return out;
}

nlohmann::json to_json(const RankVector& r) {
  nlohmann::json j{{"family", family_name(r.family)}, {"r1", r.r1}, {"r2", r.r2}, {"r3", r.r3}};
  if (r.family == Family::joint) j["s4"] = r.s4;
  j["r4"] = r.r4;
  return j;
}

nlohmann::json to_json(const Hypergraph& h, const Structure& s, Family family) {
  nlohmann::json j;
  if (const auto* l = std::get_if<Lollipop>(&s)) {
    j = {{"type", "lollipop"}, {"kind", l->kind == LollipopKind::ordinary ? "o" : "p"},
         {"cycle", to_json(l->cycle)}, {"path", to_json(l->path)}};
  } else if (const auto* d = std::get_if<DcpPair>(&s)) {
    j = {{"type", "dcp"}, {"cycle", to_json(d->cycle)}, {"path", to_json(d->path)}};
  } else {
    const auto& c = std::get<DccPair>(s);
    j = {{"type", "dcc"}, {"cycle", to_json(c.cycle)}, {"second", to_json(c.second)}};
  }
  j["rank"] = to_json(rank(h, s, family));
  return j;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::lollipop: return "lollipop";
    case Family::dcp: return "dcp";
    case Family::joint: return "dcc";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "lollipop") return Family::lollipop;
  if (name == "dcp") return Family::dcp;
  if (name == "dcc" || name == "joint") return Family::joint;
  throw InputError("unknown family: " + std::string(name));
}

}  // namespace berge
