// Command-line front end: generation, analysis, search and verification.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "berge/berge.hpp"
#include "berge/connectivity.hpp"
#include "berge/constructions.hpp"
#include "berge/cycle_lemmas.hpp"
#include "berge/errors.hpp"
#include "berge/harness.hpp"
#include "berge/io.hpp"
#include "berge/search.hpp"
#include "berge/structures.hpp"

namespace {

using namespace berge;
using nlohmann::json;

enum Exit : int { ok = 0, violation = 1, inconclusive = 2, no_cycle = 3, usage = 64, malformed = 65 };

// Thrown for bad flag values that CLI11 cannot catch by itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedFile : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Hypergraph load(const std::string& path) {
  try {
    return read_hypergraph_file(path);
  } catch (const ParseError& e) {
    throw MalformedFile(path + ": " + e.what());
  } catch (const InputError& e) {
    throw MalformedFile(path + ": " + e.what());
  }
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw UsageError("cannot write " + out_path);
  f << text;
}

std::string cycle_text(const BergeCycle& c) {
  std::ostringstream s;
  for (int i = 0; i < c.length(); ++i)
    s << "v" << c.vertices[static_cast<std::size_t>(i)] << " e" << c.edges[static_cast<std::size_t>(i)] << " ";
  s << "v" << c.vertices.front();
  return s.str();
}

json read_config(const std::string& arg) {
  std::string text = arg;
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || arg[first] != '{') {
    std::ifstream f(arg);
    if (!f) throw UsageError("cannot read config " + arg);
    std::stringstream buf;
    buf << f.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedFile("config: " + std::string(e.what()));
  }
}

int upper_bound(const Hypergraph& h) {
  int cyclic = 0, big = 0;
  for (Vertex v = 0; v < h.n(); ++v) cyclic += degree(h, v) >= 2;
  for (const Edge& e : h.edges()) big += e.size() >= 2;
  return std::min(cyclic, big);
}

struct Options {
  unsigned threads = 0;
  std::string file, out, config, family = "lollipop", which;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
  int restarts = 32;
  int k = -1;
  bool as_json = false;
  // generator parameters
  int r = -1, gk = -1, m = -1, q = -1, n = -1, a = -1, b = -1, a_prime = -1, b_prime = -1;
};

int cmd_circumference(const Options& o) {
  const Hypergraph h = load(o.file);
  require_valid(h);
  const auto res = circumference(h, o.budget);
  if (o.as_json) {
    json j{{"circumference", res.length}, {"exhaustive", res.exhaustive}, {"budget", o.budget},
           {"expansions", res.expansions}, {"witness", res.witness ? to_json(*res.witness) : json(nullptr)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "c(H) = " << res.length << (res.exhaustive ? "" : " (lower bound, budget exhausted)") << "\n";
    if (res.witness) std::cout << "witness: " << cycle_text(*res.witness) << "\n";
    std::cout << "budget: " << o.budget << ", expansions: " << res.expansions << "\n";
  }
  return res.exhaustive ? ok : inconclusive;
}

int cmd_connectivity(const Options& o) {
  const Hypergraph h = load(o.file);
  require_valid(h);
  const Graph g = incidence_as_graph(h);
  if (o.k >= 0) {
    const bool yes = is_k_connected(g, o.k);
    if (o.as_json)
      std::cout << json{{"k", o.k}, {"k_connected", yes}}.dump(2) << "\n";
    else
      std::cout << o.k << "-connected: " << (yes ? "true" : "false") << "\n";
    return ok;
  }
  const int kappa = vertex_connectivity(g);
  if (o.as_json)
    std::cout << json{{"connectivity", kappa}}.dump(2) << "\n";
  else
    std::cout << "kappa(I_H) = " << kappa << "\n";
  return ok;
}

int cmd_generate(const Options& o) {
  auto need = [&](int v, const char* flag) {
    if (v < 0) throw UsageError(std::string("generate ") + o.which + " needs --" + flag);
    return v;
  };
  Construction c;
  try {
    if (o.which == "hk")
      c = gen_Hk(need(o.r, "r"), need(o.gk, "k"), need(o.m, "m"));
    else if (o.which == "h1")
      c = gen_H1(need(o.r, "r"), need(o.gk, "k"), need(o.q, "q"));
    else if (o.which == "h2")
      c = gen_H2(need(o.r, "r"), need(o.gk, "k"), need(o.n, "n"));
    else if (o.which == "g3")
      c = gen_G3(need(o.a, "a"), need(o.b, "b"), need(o.a_prime, "a-prime"), need(o.b_prime, "b-prime"));
    else
      c = gen_Kbip(need(o.gk, "k"), need(o.n, "n"));
  } catch (const InputError& e) {
    throw UsageError(e.what());
  }
  emit(o.out, to_text(c.graph, {to_json(c.spec).dump()}));
  if (!o.out.empty()) std::cout << "wrote " << c.spec.name << " (n=" << c.graph.n() << ", m=" << c.graph.m() << ") to " << o.out << "\n";
  return ok;
}

int cmd_find_cycle(const Options& o) {
  const Hypergraph h = load(o.file);
  require_valid(h);
  LongCycleResult res;
  try {
    res = find_long_cycle(h, o.seed, o.restarts);
  } catch (const NoCycleError& e) {
    std::cout << "no Berge cycle: " << e.what() << "\n";
    return no_cycle;
  }
  const int ub = upper_bound(h);
  json j{{"length", res.cycle.length()}, {"cycle", to_json(res.cycle)}, {"upper_bound", ub},
         {"seed", o.seed}, {"restarts", res.restarts}, {"max_restarts", o.restarts}, {"trajectory", res.trajectory}};
  if (o.k >= 0) j["theorem_bound"] = std::min({2 * o.k, h.n(), h.m()});
  if (o.as_json) {
    j["final_structure"] = res.final_structure;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "length " << res.cycle.length() << " (upper bound " << ub;
    if (o.k >= 0) std::cout << ", min{2k,n,m} = " << j["theorem_bound"].get<int>();
    std::cout << ") after " << res.restarts << " restart(s)\n" << "cycle: " << cycle_text(res.cycle) << "\n";
  }
  return ok;
}

int cmd_verify(const Options& o, const CLI::App& sub) {
  json cfg = read_config(o.config);
  json report;
  int code = ok;
  try {
    if (o.which == "cycle-lemmas") {
      if (!cfg.is_object()) throw InputError("config must be a JSON object");
      const int max_s = cfg.value("max_s", 12);
      if (max_s < 3 || max_s > 16) throw InputError("max_s must be in [3, 16]");
      report = verify_claims_exhaustive(max_s);
      if (report.at("total_violations").get<long long>() > 0) code = violation;
      std::cerr << "cycle-lemmas max_s=" << max_s << ": " << report.at("total_violations") << " violation(s)\n";
    } else {
      BatchConfig bc = batch_config_from_json(cfg, parse_theorem_id(o.which));
      if (sub.count("--seed")) bc.seed = o.seed;
      if (o.threads) bc.threads = o.threads;
      report = batch_verify(bc);
      const auto& s = report.at("summary");
      if (s.at("violations").get<long long>() > 0)
        code = violation;
      else if (s.at("inconclusive").get<long long>() > 0)
        code = inconclusive;
      std::cerr << o.which << ": checked " << s.at("checked") << ", holds " << s.at("holds") << ", violations "
                << s.at("violations") << ", inconclusive " << s.at("inconclusive") << ", budget " << bc.budget << "\n";
    }
  } catch (const InputError& e) {
    throw MalformedFile(std::string("config: ") + e.what());
  } catch (const json::exception& e) {
    throw MalformedFile(std::string("config: ") + e.what());
  }
  emit(o.out, report.dump(2) + "\n");
  return code;
}

int cmd_best_structure(const Options& o) {
  const Hypergraph h = load(o.file);
  require_valid(h);
  const Family fam = parse_family(o.family);
  const auto best = enumerate_best(h, fam, o.budget);
  json j{{"family", o.family}, {"exhaustive", best.exhaustive}, {"budget", o.budget}, {"expansions", best.expansions}};
  j["structure"] = best.structure ? to_json(h, *best.structure, fam) : json(nullptr);
  std::cout << j.dump(2) << "\n";
  return best.exhaustive ? ok : inconclusive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Berge cycle toolkit"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "worker threads (default: all cores)");

  auto* circ = app.add_subcommand("circumference", "exact circumference with a witness cycle");
  circ->add_option("file", o.file)->required();
  circ->add_option("--budget", o.budget, "node expansion budget");
  circ->add_flag("--json", o.as_json);

  auto* conn = app.add_subcommand("connectivity", "vertex connectivity of the incidence graph");
  conn->add_option("file", o.file)->required();
  conn->add_option("--k", o.k, "test k-connectivity instead")->check(CLI::NonNegativeNumber);
  conn->add_flag("--json", o.as_json);

  auto* gen = app.add_subcommand("generate", "sharpness constructions");
  gen->add_option("family", o.which)->required()->check(CLI::IsMember({"hk", "h1", "h2", "g3", "kbip"}));
  gen->add_option("--r", o.r);
  gen->add_option("--k", o.gk);
  gen->add_option("--m", o.m);
  gen->add_option("--q", o.q);
  gen->add_option("--n", o.n);
  gen->add_option("--a", o.a);
  gen->add_option("--b", o.b);
  gen->add_option("--a-prime", o.a_prime);
  gen->add_option("--b-prime", o.b_prime);
  gen->add_option("-o,--output", o.out);

  auto* find = app.add_subcommand("find-cycle", "heuristic long cycle");
  find->add_option("file", o.file)->required();
  find->add_option("--seed", o.seed);
  find->add_option("--budget", o.restarts, "maximum number of restarts")->check(CLI::PositiveNumber);
  find->add_option("--k", o.k, "also report min{2k, n, m}")->check(CLI::NonNegativeNumber);
  find->add_flag("--json", o.as_json);

  auto* verify = app.add_subcommand("verify", "batch verification runs");
  verify->add_option("what", o.which)
      ->required()
      ->check(CLI::IsMember({"theorem19", "dirac", "jackson-cor", "mainold2", "cycle-lemmas"}));
  verify->add_option("--config", o.config, "JSON file or inline JSON")->required();
  verify->add_option("--seed", o.seed);
  verify->add_option("-o,--output", o.out);

  auto* best = app.add_subcommand("best-structure", "exhaustive best lollipop / dcp-pair / dcc-pair");
  best->add_option("file", o.file)->required();
  best->add_option("--family", o.family)->check(CLI::IsMember({"lollipop", "dcp", "dcc"}));
  best->add_option("--budget", o.budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*circ) return cmd_circumference(o);
    if (*conn) return cmd_connectivity(o);
    if (*gen) return cmd_generate(o);
    if (*find) return cmd_find_cycle(o);
    if (*verify) return cmd_verify(o, *verify);
    if (*best) return cmd_best_structure(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const MalformedFile& e) {
    std::cerr << "error: " << e.what() << "\n";
    return malformed;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return malformed;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return malformed;
  } catch (const BudgetExhausted& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return inconclusive;
  }
  return usage;
}
