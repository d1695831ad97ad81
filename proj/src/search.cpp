#include "berge/search.hpp"

#include <algorithm>
#include <bit>

#include "berge/errors.hpp"

namespace berge {

namespace {

using Mask = std::uint64_t;

// Edge ids shared by each ordered vertex pair, sorted.
class CommonEdges {
 public:
  explicit CommonEdges(const Hypergraph& h) : n_(h.n()), lists_(static_cast<std::size_t>(h.n() * h.n())) {
    for (EdgeId e = 0; e < h.m(); ++e) {
      const auto& ed = h.edge(e);
      for (Vertex a : ed)
        for (Vertex b : ed)
          if (a != b) lists_[static_cast<std::size_t>(a * n_ + b)].push_back(e);
    }
  }
  const std::vector<EdgeId>& operator()(Vertex a, Vertex b) const {
    return lists_[static_cast<std::size_t>(a * n_ + b)];
  }

 private:
  int n_;
  std::vector<std::vector<EdgeId>> lists_;
};

// Consecutive vertex pairs matched to distinct edges. Pairs are pushed and
// popped in stack order; popping the last pair keeps the rest matched, so no
// undo journal is needed.
class PairMatcher {
 public:
  PairMatcher(const CommonEdges& common, int m)
      : common_(common), edge_pair_(static_cast<std::size_t>(m), -1), seen_(static_cast<std::size_t>(m), 0) {}

  bool push(Vertex a, Vertex b) {
    pairs_.push_back({a, b});
    pair_edge_.push_back(-1);
    ++stamp_;
    if (augment(static_cast<int>(pairs_.size()) - 1)) return true;
    pairs_.pop_back();
    pair_edge_.pop_back();
    return false;
  }

  void pop() {
    edge_pair_[static_cast<std::size_t>(pair_edge_.back())] = -1;
    pairs_.pop_back();
    pair_edge_.pop_back();
  }

  void forbid(EdgeId e) { edge_pair_[static_cast<std::size_t>(e)] = kForbidden; }

 private:
  static constexpr int kForbidden = -2;

  bool augment(int p) {
    auto [a, b] = pairs_[static_cast<std::size_t>(p)];
    for (EdgeId e : common_(a, b)) {
      auto ee = static_cast<std::size_t>(e);
      if (seen_[ee] == stamp_ || edge_pair_[ee] == kForbidden) continue;
      seen_[ee] = stamp_;
      if (edge_pair_[ee] == -1 || augment(edge_pair_[ee])) {
        edge_pair_[ee] = p;
        pair_edge_[static_cast<std::size_t>(p)] = e;
        return true;
      }
    }
    return false;
  }

  const CommonEdges& common_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::vector<EdgeId> pair_edge_;
  std::vector<int> edge_pair_;
  std::vector<unsigned> seen_;
  unsigned stamp_ = 0;
};

struct BudgetStop {};

// Depth-first enumeration of vertex sequences in lexicographic order, with
// pair-to-edge matching maintained along the current sequence.
class SequenceSearch {
 public:
  SequenceSearch(const Hypergraph& h, std::uint64_t budget, std::uint64_t& expansions)
      : h_(h), common_(h), matcher_(common_, h.m()), shadow_(shadow_masks(h)), budget_(budget), expansions_(expansions) {}

  void tick() {
    if (++expansions_ > budget_) throw BudgetStop{};
  }

  // Vertices of `avail` reachable from `from` through `avail`.
  Mask reach(Vertex from, Mask avail) const {
    Mask r = shadow_[static_cast<std::size_t>(from)] & avail;
    Mask frontier = r;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= shadow_[static_cast<std::size_t>(std::countr_zero(f))];
      next &= avail & ~r;
      r |= next;
      frontier = next;
    }
    return r;
  }

  const Hypergraph& h_;
  CommonEdges common_;
  PairMatcher matcher_;
  std::vector<Mask> shadow_;
  std::uint64_t budget_;
  std::uint64_t& expansions_;
  std::vector<Vertex> seq_;
};

class CycleSearch : public SequenceSearch {
 public:
  using SequenceSearch::SequenceSearch;

  // Mode 1: maximise length. Mode 2: exact length, callback per skeleton.
  void maximise(int upper) {
    upper_ = upper;
    for (Vertex v0 = 0; v0 < h_.n() && best_ < upper_; ++v0) {
      Mask allowed = cyclic_ & ~((Mask{2} << v0) - 1);
      if (!(cyclic_ >> v0 & 1) || std::popcount(allowed) + 1 <= best_) continue;
      allowed_ = allowed;
      seq_ = {v0};
      grow_max(Mask{1} << v0);
    }
  }

  void exact(int length, const std::function<bool(const std::vector<Vertex>&)>& fn) {
    target_ = length;
    fn_ = &fn;
    for (Vertex v0 = 0; v0 < h_.n() && !stopped_; ++v0) {
      Mask allowed = cyclic_ & ~((Mask{2} << v0) - 1);
      if (!(cyclic_ >> v0 & 1) || std::popcount(allowed) + 1 < length) continue;
      allowed_ = allowed;
      seq_ = {v0};
      grow_exact(Mask{1} << v0);
    }
  }

  void set_cyclic(Mask m) { cyclic_ = m; }

  int best_ = 0;
  std::vector<Vertex> best_seq_;

 private:
  bool can_close() const {
    std::size_t len = seq_.size();
    return len == 2 || (len >= 3 && seq_[1] < seq_.back());
  }

  void grow_max(Mask used) {
    tick();
    const Vertex v0 = seq_.front(), last = seq_.back();
    const int len = static_cast<int>(seq_.size());
    if (len >= 2 && len > best_ && can_close() && (shadow_[static_cast<std::size_t>(last)] >> v0 & 1)) {
      if (matcher_.push(last, v0)) {
        matcher_.pop();
        best_ = len;
        best_seq_ = seq_;
        if (best_ >= upper_) return;
      }
    }
    Mask avail = allowed_ & ~used;
    Mask r = reach(last, avail);
    if (len + std::popcount(r) <= best_) return;
    for (Mask cand = shadow_[static_cast<std::size_t>(last)] & avail; cand; cand &= cand - 1) {
      Vertex w = std::countr_zero(cand);
      if (!matcher_.push(last, w)) continue;
      seq_.push_back(w);
      grow_max(used | Mask{1} << w);
      seq_.pop_back();
      matcher_.pop();
      if (best_ >= upper_) return;
      // Later siblings cannot beat best_ if the remaining reach is too small.
      if (len + std::popcount(r) <= best_) return;
    }
  }

  void grow_exact(Mask used) {
    tick();
    const Vertex v0 = seq_.front(), last = seq_.back();
    const int len = static_cast<int>(seq_.size());
    if (len == target_) {
      if (can_close() && (shadow_[static_cast<std::size_t>(last)] >> v0 & 1) && matcher_.push(last, v0)) {
        matcher_.pop();
        if (!(*fn_)(seq_)) stopped_ = true;
      }
      return;
    }
    Mask avail = allowed_ & ~used;
    if (len + std::popcount(reach(last, avail)) < target_) return;
    for (Mask cand = shadow_[static_cast<std::size_t>(last)] & avail; cand && !stopped_; cand &= cand - 1) {
      Vertex w = std::countr_zero(cand);
      if (!matcher_.push(last, w)) continue;
      seq_.push_back(w);
      grow_exact(used | Mask{1} << w);
      seq_.pop_back();
      matcher_.pop();
    }
  }

  Mask cyclic_ = 0, allowed_ = 0;
  int upper_ = 0, target_ = 0;
  bool stopped_ = false;
  const std::function<bool(const std::vector<Vertex>&)>* fn_ = nullptr;
};

class PathSearch : public SequenceSearch {
 public:
  using SequenceSearch::SequenceSearch;

  void maximise(int upper) {
    upper_ = upper;
    const Mask all = h_.n() == 64 ? ~Mask{0} : (Mask{1} << h_.n()) - 1;
    for (Vertex u0 = 0; u0 < h_.n() && best_ < upper_; ++u0) {
      seq_ = {u0};
      if (best_ < 0) {
        best_ = 0;
        best_seq_ = seq_;
      }
      grow(Mask{1} << u0, all);
    }
  }

  int best_ = -1;
  std::vector<Vertex> best_seq_;

 private:
  void grow(Mask used, Mask all) {
    tick();
    const Vertex last = seq_.back();
    const int edges = static_cast<int>(seq_.size()) - 1;
    if (edges > best_ && seq_.front() < last) {
      best_ = edges;
      best_seq_ = seq_;
      if (best_ >= upper_) return;
    }
    Mask avail = all & ~used;
    Mask r = reach(last, avail);
    if (edges + std::popcount(r) <= best_) return;
    for (Mask cand = shadow_[static_cast<std::size_t>(last)] & avail; cand; cand &= cand - 1) {
      Vertex w = std::countr_zero(cand);
      if (!matcher_.push(last, w)) continue;
      seq_.push_back(w);
      grow(used | Mask{1} << w, all);
      seq_.pop_back();
      matcher_.pop();
      if (best_ >= upper_ || edges + std::popcount(r) <= best_) return;
    }
  }

  int upper_ = 0;
};

void require_searchable(const Hypergraph& h) {
  require_valid(h);
  if (h.n() > 64) throw InputError("exact search supports at most 64 vertices");
}

// Vertices lying in at least two edges of size >= 2: only these can be on a cycle.
Mask cyclic_vertices(const Hypergraph& h) {
  Mask m = 0;
  for (Vertex v = 0; v < h.n(); ++v) {
    int d = 0;
    for (EdgeId e : h.incident(v)) d += h.edge(e).size() >= 2;
    if (d >= 2) m |= Mask{1} << v;
  }
  return m;
}

// Greedy lexicographically least system of distinct edges for consecutive pairs.
std::optional<std::vector<EdgeId>> least_assignment(const Hypergraph& h, const CommonEdges& common,
                                                    const std::vector<std::pair<Vertex, Vertex>>& pairs,
                                                    const std::vector<char>& forbidden) {
  std::vector<EdgeId> chosen;
  std::vector<char> taken(static_cast<std::size_t>(h.m()), 0);
  for (std::size_t e = 0; e < forbidden.size() && e < taken.size(); ++e) taken[e] = forbidden[e];
  auto rest_ok = [&](std::size_t from) {
    PairMatcher pm(common, h.m());
    for (std::size_t e = 0; e < taken.size(); ++e)
      if (taken[e]) pm.forbid(static_cast<EdgeId>(e));
    for (std::size_t i = from; i < pairs.size(); ++i)
      if (!pm.push(pairs[i].first, pairs[i].second)) return false;
    return true;
  };
  if (!rest_ok(0)) return std::nullopt;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    bool placed = false;
    for (EdgeId e : common(pairs[i].first, pairs[i].second)) {
      if (taken[static_cast<std::size_t>(e)]) continue;
      taken[static_cast<std::size_t>(e)] = 1;
      if (rest_ok(i + 1)) {
        chosen.push_back(e);
        placed = true;
        break;
      }
      taken[static_cast<std::size_t>(e)] = 0;
    }
    if (!placed) return std::nullopt;
  }
  return chosen;
}

std::vector<std::pair<Vertex, Vertex>> cycle_pairs(const std::vector<Vertex>& vs) {
  std::vector<std::pair<Vertex, Vertex>> p;
  for (std::size_t i = 0; i < vs.size(); ++i) p.push_back({vs[i], vs[(i + 1) % vs.size()]});
  return p;
}

}  // namespace

std::optional<std::vector<EdgeId>> assign_cycle_edges(const Hypergraph& h, const std::vector<Vertex>& vertices,
                                                      const std::vector<char>& forbidden_edges) {
  require_valid(h);
  if (vertices.size() < 2) return std::nullopt;
  for (Vertex v : vertices)
    if (v < 0 || v >= h.n()) throw InputError("cycle vertex out of range");
  CommonEdges common(h);
  return least_assignment(h, common, cycle_pairs(vertices), forbidden_edges);
}

CycleSearchResult circumference(const Hypergraph& h, std::uint64_t budget) {
  require_searchable(h);
  CycleSearchResult res;
  Mask cyc = cyclic_vertices(h);
  int multi_edges = 0;
  for (const auto& e : h.edges()) multi_edges += e.size() >= 2;
  const int upper = std::min(std::popcount(cyc), multi_edges);
  if (upper < 2) return res;
  CycleSearch s(h, budget, res.expansions);
  s.set_cyclic(cyc);
  try {
    s.maximise(upper);
  } catch (const BudgetStop&) {
    res.exhaustive = false;
    res.budget_exceeded = true;
    res.expansions = budget;
  }
  if (s.best_ >= 2) {
    res.length = s.best_;
    auto edges = least_assignment(h, s.common_, cycle_pairs(s.best_seq_), {});
    res.witness = BergeCycle{s.best_seq_, *edges};
  }
  return res;
}

PathSearchResult longest_berge_path(const Hypergraph& h, std::uint64_t budget) {
  require_searchable(h);
  PathSearchResult res;
  if (h.n() == 0) return res;
  int multi_edges = 0;
  for (const auto& e : h.edges()) multi_edges += e.size() >= 2;
  PathSearch s(h, budget, res.expansions);
  try {
    s.maximise(std::min(h.n() - 1, multi_edges));
  } catch (const BudgetStop&) {
    res.exhaustive = false;
    res.budget_exceeded = true;
    res.expansions = budget;
  }
  res.length = std::max(s.best_, 0);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i + 1 < s.best_seq_.size(); ++i) pairs.push_back({s.best_seq_[i], s.best_seq_[i + 1]});
  auto edges = least_assignment(h, s.common_, pairs, {});
  res.witness = BergePath{s.best_seq_, *edges, PathKind::full};
  return res;
}

bool has_hamiltonian_berge_cycle(const Hypergraph& h, std::uint64_t budget) {
  require_valid(h);
  if (h.m() < h.n() || h.n() < 2) return false;
  auto res = circumference(h, budget);
  if (res.length == h.n()) return true;
  if (!res.exhaustive) throw BudgetExhausted("hamiltonicity undecided within budget");
  return false;
}

void for_each_cycle_skeleton(const Hypergraph& h, int length,
                             const std::function<bool(const std::vector<Vertex>&)>& fn, std::uint64_t budget,
                             std::uint64_t& expansions) {
  require_searchable(h);
  if (length < 2) return;
  CycleSearch s(h, budget, expansions);
  s.set_cyclic(cyclic_vertices(h));
  try {
    s.exact(length, fn);
  } catch (const BudgetStop&) {
    throw BudgetExhausted("cycle skeleton enumeration budget exhausted");
  }
}

}  // namespace berge
