#include "berge/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "berge/connectivity.hpp"
#include "berge/errors.hpp"
#include "berge/structures.hpp"

namespace berge {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int uniformity(const Hypergraph& h) {
  if (h.m() == 0) return 0;
  const auto sz = h.edge(0).size();
  for (const Edge& e : h.edges())
    if (e.size() != sz) return 0;
  return static_cast<int>(sz);
}

// Runs fn(i) for i in [0, count) on `threads` workers; rethrows the first error.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  pool.clear();
  if (error) std::rethrow_exception(error);
}

class EdgePool {
 public:
  EdgePool(int n, int r, std::mt19937_64& rng) : n_(n), r_(r), rng_(rng) {
    if (binom(n, r) <= 20000) {
      std::vector<int> idx(static_cast<std::size_t>(r));
      for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
      while (true) {
        all_.emplace_back(idx.begin(), idx.end());
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      }
      std::shuffle(all_.begin(), all_.end(), rng_);
      enumerated_ = true;
    }
  }

  std::optional<Edge> next() {
    if (enumerated_) {
      if (pos_ == all_.size()) return std::nullopt;
      return all_[pos_++];
    }
    // too many r-sets to list: draw fresh ones at random
    std::vector<Vertex> verts(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) verts[static_cast<std::size_t>(v)] = v;
    for (int attempt = 0; attempt < 1000; ++attempt) {
      std::shuffle(verts.begin(), verts.end(), rng_);
      Edge e(verts.begin(), verts.begin() + r_);
      std::sort(e.begin(), e.end());
      if (seen_.insert(e).second) return e;
    }
    return std::nullopt;
  }

 private:
  int n_, r_;
  std::mt19937_64& rng_;
  bool enumerated_ = false;
  std::vector<Edge> all_;
  std::size_t pos_ = 0;
  std::set<Edge> seen_;
};

bool targets_hold(int n, const std::vector<Edge>& edges, int r, const SamplerOptions& opt) {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges)
    for (Vertex v : e) ++deg[static_cast<std::size_t>(v)];
  if (*std::min_element(deg.begin(), deg.end()) < opt.min_degree) return false;
  return !opt.two_connected || is_k_connected(Hypergraph(n, edges, r), 2);
}

struct CellKey {
  int n, r, k;
  auto operator<=>(const CellKey&) const = default;
};

std::uint64_t cell_seed(std::uint64_t seed, TheoremId id, const CellKey& c) {
  std::uint64_t s = mix(seed);
  for (int x : {static_cast<int>(id), c.n, c.r, c.k}) s = mix(s ^ static_cast<std::uint64_t>(x));
  return s;
}

// Degree target and connectivity requirement for sampling a cell, or nullopt
// when the theorem's parameter range excludes it.
std::optional<SamplerOptions> cell_sampler(TheoremId id, const CellKey& c) {
  SamplerOptions o;
  o.n = c.n;
  o.r = c.r;
  switch (id) {
    case TheoremId::theorem19:
      if (!(3 <= c.k && c.k <= c.r + 1 && c.r + 1 <= c.n)) return std::nullopt;
      o.min_degree = c.k;
      break;
    case TheoremId::dirac:
      if (!(c.r == 2 && 2 <= c.k && c.k <= c.n - 1)) return std::nullopt;
      o.min_degree = c.k;
      break;
    case TheoremId::jackson_cor:
      if (!(2 <= c.k && c.k <= c.r - 1 && c.r < c.n)) return std::nullopt;
      o.min_degree = c.k + 1;
      break;
    case TheoremId::mainold2: {
      if (!(3 <= c.r && c.r < c.n)) return std::nullopt;
      const int t = (c.n - 1) / 2;
      if (2 * c.r >= c.n)
        o.min_degree = c.r;
      else if (c.r <= t)
        o.min_degree = static_cast<int>(binom(t, c.r - 1)) + 1;
      else
        return std::nullopt;
      if (o.min_degree > binom(c.n - 1, c.r - 1)) return std::nullopt;
      o.two_connected = false;
      break;
    }
  }
  return o;
}

std::vector<int> json_ints(const nlohmann::json& j, const char* key, std::vector<int> fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  std::vector<int> out;
  if (v.is_number_integer()) {
    out.push_back(v.get<int>());
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (!x.is_number_integer()) throw InputError(std::string("grid.") + key + " must hold integers");
      out.push_back(x.get<int>());
    }
  } else if (v.is_object() && v.contains("from") && v.contains("to")) {
    for (int x = v.at("from").get<int>(); x <= v.at("to").get<int>(); ++x) out.push_back(x);
  } else {
    throw InputError(std::string("grid.") + key + " must be an integer, a list or {from, to}");
  }
  return out;
}

}  // namespace

TheoremId parse_theorem_id(std::string_view name) {
  if (name == "theorem19") return TheoremId::theorem19;
  if (name == "dirac") return TheoremId::dirac;
  if (name == "jackson-cor") return TheoremId::jackson_cor;
  if (name == "mainold2") return TheoremId::mainold2;
  throw InputError("unknown theorem id: " + std::string(name));
}

std::string_view theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::theorem19: return "theorem19";
    case TheoremId::dirac: return "dirac";
    case TheoremId::jackson_cor: return "jackson-cor";
    case TheoremId::mainold2: return "mainold2";
  }
  return "?";
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::violation: return "violation";
    case Status::inconclusive: return "inconclusive";
    case Status::not_applicable: return "not_applicable";
  }
  return "?";
}

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Hypergraph sample_hypergraph(const SamplerOptions& opt) {
  if (opt.n < 1 || opt.r < 1 || opt.r > opt.n) throw InputError("sampler needs 1 <= r <= n");
  std::mt19937_64 rng(mix(opt.seed));
  EdgePool pool(opt.n, opt.r, rng);
  std::vector<Edge> edges;
  std::vector<int> deg(static_cast<std::size_t>(opt.n), 0);
  while (true) {
    if (*std::min_element(deg.begin(), deg.end()) >= opt.min_degree &&
        (!opt.two_connected || is_k_connected(Hypergraph(opt.n, edges, opt.r), 2)))
      break;
    auto e = pool.next();
    if (!e) throw PreconditionError("no r-graph on these parameters meets the degree/connectivity targets");
    for (Vertex v : *e) ++deg[static_cast<std::size_t>(v)];
    edges.push_back(std::move(*e));
  }
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  const bool full = rng() % 2 == 0;
  const std::size_t limit = full ? edges.size() : static_cast<std::size_t>(rng() % (edges.size() + 1));
  std::vector<char> removed(edges.size(), 0);
  std::size_t count = 0;
  for (std::size_t i : order) {
    if (count >= limit) break;
    removed[i] = 1;
    std::vector<Edge> kept;
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (!removed[j]) kept.push_back(edges[j]);
    if (targets_hold(opt.n, kept, opt.r, opt))
      ++count;
    else
      removed[i] = 0;
  }
  std::vector<Edge> kept;
  for (std::size_t j = 0; j < edges.size(); ++j)
    if (!removed[j]) kept.push_back(edges[j]);
  std::sort(kept.begin(), kept.end());
  return Hypergraph(opt.n, std::move(kept), opt.r);
}

Hypergraph random_2connected_rgraph(int n, int r, int k, std::uint64_t seed) {
  if (!(3 <= k && k <= r + 1 && r + 1 <= n))
    throw InputError("random_2connected_rgraph needs 3 <= k <= r+1 <= n");
  return sample_hypergraph({n, r, k, true, seed});
}

TheoremRecord verify_theorem(const Hypergraph& h, int k, TheoremId id, std::uint64_t budget) {
  require_valid(h);
  TheoremRecord rec;
  rec.theorem = id;
  rec.hash = canonical_hash(h);
  rec.n = h.n();
  rec.m = h.m();
  rec.k = k;
  rec.r = uniformity(h);
  rec.delta = h.n() > 0 ? min_degree(h) : 0;
  rec.two_connected = is_k_connected(h, 2);
  const int n = rec.n, r = rec.r, m = rec.m;

  auto fail = [&](const char* why) {
    rec.hypotheses = false;
    rec.note = why;
    rec.status = Status::not_applicable;
    return rec;
  };
  if (r == 0) return fail("not uniform");
  switch (id) {
    case TheoremId::theorem19:
      if (!(3 <= k && k <= r + 1 && r + 1 <= n)) return fail("parameters outside 3 <= k <= r+1 <= n");
      if (rec.delta < k) return fail("minimum degree below k");
      if (!rec.two_connected) return fail("not 2-connected");
      rec.bound = std::min({2 * k, n, m});
      break;
    case TheoremId::dirac:
      if (r != 2) return fail("not a graph");
      if (!(2 <= k && k <= n)) return fail("parameters outside 2 <= k <= n");
      if (rec.delta < k) return fail("minimum degree below k");
      if (!rec.two_connected) return fail("not 2-connected");
      rec.bound = std::min(2 * k, n);
      break;
    case TheoremId::jackson_cor:
      if (!(2 <= k && k <= r - 1)) return fail("parameters outside 2 <= k <= r-1");
      if (rec.delta < k + 1) return fail("minimum degree below k+1");
      if (!rec.two_connected) return fail("not 2-connected");
      rec.bound = std::min({2 * k, n, m});
      break;
    case TheoremId::mainold2: {
      rec.k = 0;
      if (!(3 <= r && r < n)) return fail("parameters outside 3 <= r < n");
      const int t = (n - 1) / 2;
      const bool a = r <= t && rec.delta >= binom(t, r - 1) + 1;
      const bool b = 2 * r >= n && rec.delta >= r;
      if (!a && !b) return fail("neither degree condition holds");
      rec.bound = n;
      break;
    }
  }
  rec.hypotheses = true;
  const auto res = circumference(h, budget);
  rec.circumference = res.length;
  rec.exhaustive = res.exhaustive;
  rec.witness = res.witness;
  rec.expansions = res.expansions;
  const bool certified = rec.witness && validate_cycle(h, *rec.witness) && rec.witness->length() == res.length;
  if (certified && res.length >= rec.bound)
    rec.status = Status::holds;
  else if (res.exhaustive && (res.length == 0 || certified))
    rec.status = Status::violation;
  else
    rec.status = Status::inconclusive;
  return rec;
}

nlohmann::json to_json(const TheoremRecord& rec) {
  nlohmann::json j{{"theorem", theorem_name(rec.theorem)},
                   {"hash", hash_hex(rec.hash)},
                   {"n", rec.n},
                   {"r", rec.r},
                   {"m", rec.m},
                   {"k", rec.k},
                   {"delta", rec.delta},
                   {"two_connected", rec.two_connected},
                   {"hypotheses", rec.hypotheses},
                   {"status", status_name(rec.status)}};
  if (!rec.note.empty()) j["note"] = rec.note;
  if (rec.hypotheses) {
    j["bound"] = rec.bound;
    j["circumference"] = rec.circumference;
    j["exhaustive"] = rec.exhaustive;
    j["expansions"] = rec.expansions;
    j["witness"] = rec.witness ? to_json(*rec.witness) : nlohmann::json(nullptr);
  }
  return j;
}

BatchConfig batch_config_from_json(const nlohmann::json& j, TheoremId theorem) {
  if (!j.is_object()) throw InputError("config must be a JSON object");
  static const std::set<std::string> known{"theorem", "grid", "samples", "seed", "budget", "heuristic",
                                           "heuristic_restarts", "records", "threads"};
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) throw InputError("unknown config key: " + key);
  BatchConfig c;
  c.theorem = theorem;
  if (j.contains("theorem") && parse_theorem_id(j.at("theorem").get<std::string>()) != theorem)
    throw InputError("config theorem does not match the subcommand");
  const nlohmann::json grid = j.value("grid", nlohmann::json::object());
  switch (theorem) {
    case TheoremId::theorem19:
      c.n = json_ints(grid, "n", {6, 7, 8});
      c.r = json_ints(grid, "r", {3, 4});
      c.k = json_ints(grid, "k", {3, 4, 5});
      break;
    case TheoremId::dirac:
      c.n = json_ints(grid, "n", {6, 7, 8, 9, 10});
      c.r = json_ints(grid, "r", {2});
      c.k = json_ints(grid, "k", {3, 4, 5});
      break;
    case TheoremId::jackson_cor:
      c.n = json_ints(grid, "n", {6, 7, 8});
      c.r = json_ints(grid, "r", {3, 4, 5});
      c.k = json_ints(grid, "k", {2, 3, 4});
      break;
    case TheoremId::mainold2:
      c.n = json_ints(grid, "n", {6, 7, 8});
      c.r = json_ints(grid, "r", {3, 4, 5});
      c.k = {0};
      break;
  }
  try {
    c.samples = j.value("samples", 1000);
    c.seed = j.value("seed", std::uint64_t{0});
    c.budget = j.value("budget", kDefaultBudget);
    c.heuristic = j.value("heuristic", false);
    c.heuristic_restarts = j.value("heuristic_restarts", 32);
    c.include_records = j.value("records", true);
    c.threads = j.value("threads", 0u);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad config value: ") + e.what());
  }
  if (c.samples < 1) throw InputError("samples must be positive");
  if (c.heuristic_restarts < 1) throw InputError("heuristic_restarts must be positive");
  return c;
}

nlohmann::json batch_verify(const BatchConfig& cfg) {
  const unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  nlohmann::json report;
  report["theorem"] = theorem_name(cfg.theorem);
  report["config"] = {{"grid", {{"n", cfg.n}, {"r", cfg.r}, {"k", cfg.k}}},
                      {"samples", cfg.samples},
                      {"seed", cfg.seed},
                      {"budget", cfg.budget},
                      {"heuristic", cfg.heuristic},
                      {"heuristic_restarts", cfg.heuristic_restarts}};
  nlohmann::json cells = nlohmann::json::array();
  nlohmann::json skipped = nlohmann::json::array();
  nlohmann::json violations = nlohmann::json::array();
  nlohmann::json shortfalls = nlohmann::json::array();
  long long checked = 0, holds = 0, n_viol = 0, inconclusive = 0, not_applicable = 0;
  long long h_runs = 0, h_exact = 0, h_bound = 0;

  std::set<CellKey> seen_cells;
  for (int n : cfg.n)
    for (int r : cfg.r)
      for (int k : cfg.k) {
        const CellKey key{n, r, k};
        if (!seen_cells.insert(key).second) continue;
        const auto sampler = cell_sampler(cfg.theorem, key);
        if (!sampler) {
          skipped.push_back({{"n", n}, {"r", r}, {"k", k}, {"reason", "outside the theorem's parameter range"}});
          continue;
        }
        const std::uint64_t base = cell_seed(cfg.seed, cfg.theorem, key);

        // Draw attempts in batches; keep the first `samples` distinct instances
        // in attempt order so the outcome is independent of scheduling.
        std::vector<Hypergraph> instances;
        std::vector<std::uint64_t> inst_seed;
        std::set<std::uint64_t> hashes;
        long long attempts = 0, duplicates = 0;
        bool impossible = false;
        const long long max_attempts = 20LL * cfg.samples;
        while (static_cast<int>(instances.size()) < cfg.samples && attempts < max_attempts && !impossible) {
          const auto batch = static_cast<std::size_t>(std::min<long long>(cfg.samples - static_cast<long long>(instances.size()), max_attempts - attempts));
          std::vector<std::optional<Hypergraph>> drawn(batch);
          std::vector<char> failed(batch, 0);
          parallel_for(batch, threads, [&](std::size_t i) {
            SamplerOptions o = *sampler;
            o.seed = mix(base + static_cast<std::uint64_t>(attempts) + i);
            try {
              drawn[i] = sample_hypergraph(o);
            } catch (const PreconditionError&) {
              failed[i] = 1;
            }
          });
          for (std::size_t i = 0; i < batch; ++i) {
            if (failed[i]) {
              impossible = true;
              break;
            }
            if (static_cast<int>(instances.size()) >= cfg.samples) break;
            const auto hv = canonical_hash(*drawn[i]);
            if (!hashes.insert(hv).second) {
              ++duplicates;
              continue;
            }
            instances.push_back(std::move(*drawn[i]));
            inst_seed.push_back(mix(base + static_cast<std::uint64_t>(attempts) + i));
          }
          attempts += static_cast<long long>(batch);
        }

        std::vector<TheoremRecord> recs(instances.size());
        struct Heur {
          int length = 0;
          bool exact = false, bound = false;
          nlohmann::json dump;
        };
        std::vector<Heur> heur(instances.size());
        parallel_for(instances.size(), threads, [&](std::size_t i) {
          recs[i] = verify_theorem(instances[i], k, cfg.theorem, cfg.budget);
          if (cfg.heuristic && recs[i].hypotheses) {
            const auto res = find_long_cycle(instances[i], inst_seed[i], cfg.heuristic_restarts);
            Heur& hr = heur[i];
            hr.length = res.cycle.length();
            hr.exact = recs[i].exhaustive && hr.length == recs[i].circumference;
            hr.bound = hr.length >= recs[i].bound;
            if (!hr.exact || !hr.bound) hr.dump = res.final_structure;
          }
        });

        std::vector<std::size_t> order(recs.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return recs[a].hash < recs[b].hash; });

        nlohmann::json cell{{"n", n}, {"r", r}, {"k", k}, {"min_degree_target", sampler->min_degree},
                            {"attempts", attempts}, {"duplicates_skipped", duplicates}};
        if (impossible) cell["generation_failure"] = "no instance meets the sampler targets";
        nlohmann::json records = nlohmann::json::array();
        long long c_checked = 0, c_holds = 0, c_viol = 0, c_inc = 0, c_na = 0;
        long long c_runs = 0, c_exact = 0, c_bound = 0;
        for (std::size_t i : order) {
          const auto& rec = recs[i];
          nlohmann::json jr = to_json(rec);
          ++c_checked;
          switch (rec.status) {
            case Status::holds: ++c_holds; break;
            case Status::violation:
              ++c_viol;
              violations.push_back(jr);
              break;
            case Status::inconclusive: ++c_inc; break;
            case Status::not_applicable: ++c_na; break;
          }
          if (cfg.heuristic && rec.hypotheses) {
            const Heur& hr = heur[i];
            ++c_runs;
            c_exact += hr.exact;
            c_bound += hr.bound;
            jr["heuristic_length"] = hr.length;
            if (!hr.exact || !hr.bound)
              shortfalls.push_back({{"hash", hash_hex(rec.hash)}, {"n", n}, {"r", r}, {"k", k},
                                    {"heuristic_length", hr.length}, {"circumference", rec.circumference},
                                    {"bound", rec.bound}, {"stalled_structure", hr.dump}});
          }
          if (cfg.include_records) records.push_back(std::move(jr));
        }
        cell["summary"] = {{"checked", c_checked}, {"holds", c_holds}, {"violations", c_viol},
                           {"inconclusive", c_inc}, {"not_applicable", c_na}};
        if (cfg.heuristic)
          cell["heuristic"] = {{"runs", c_runs}, {"reached_exact", c_exact}, {"reached_bound", c_bound}};
        if (cfg.include_records) cell["records"] = std::move(records);
        cells.push_back(std::move(cell));
        checked += c_checked;
        holds += c_holds;
        n_viol += c_viol;
        inconclusive += c_inc;
        not_applicable += c_na;
        h_runs += c_runs;
        h_exact += c_exact;
        h_bound += c_bound;
      }
  report["cells"] = std::move(cells);
  if (!skipped.empty()) report["skipped_cells"] = std::move(skipped);
  report["summary"] = {{"checked", checked}, {"holds", holds}, {"violations", n_viol},
                       {"inconclusive", inconclusive}, {"not_applicable", not_applicable}};
  report["violations"] = std::move(violations);
  if (cfg.heuristic) {
    report["heuristic"] = {{"runs", h_runs}, {"reached_exact", h_exact}, {"reached_bound", h_bound},
                           {"shortfalls", std::move(shortfalls)}};
  }
  return report;
}

}  // namespace berge
