#include "berge/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "berge/errors.hpp"

namespace berge {

namespace {

bool blank_or_comment(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::vector<long long> ints_of(const std::string& line, std::size_t lineno) {
  std::istringstream ss(line);
  std::vector<long long> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ParseError(lineno, "expected an integer, got '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

Hypergraph checked(Hypergraph h, std::size_t lineno_of_edge0, const std::vector<std::size_t>& edge_lines) {
  auto v = validate(h);
  if (!v.empty()) {
    std::size_t line = v.front().edge >= 0 ? edge_lines.at(static_cast<std::size_t>(v.front().edge)) : lineno_of_edge0;
    throw ParseError(line, v.front().message);
  }
  return h;
}

Hypergraph parse_text(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  long long n = -1, m = -1, r = -1;
  std::size_t header_line = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    auto xs = ints_of(line, lineno);
    if (n < 0) {
      if (xs.size() != 3) throw ParseError(lineno, "header must be 'n m r'");
      n = xs[0], m = xs[1], r = xs[2];
      if (n < 0 || m < 0 || r < 0 || n > (1 << 24) || m > (1 << 26)) throw ParseError(lineno, "bad header values");
      header_line = lineno;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) throw ParseError(lineno, "more edge lines than declared");
    Edge e;
    for (long long x : xs) {
      if (x < 0 || x >= n) throw ParseError(lineno, "vertex " + std::to_string(x) + " out of range");
      e.push_back(static_cast<Vertex>(x));
    }
    if (r > 0 && static_cast<long long>(e.size()) != r)
      throw ParseError(lineno, "edge has " + std::to_string(e.size()) + " vertices, expected " + std::to_string(r));
    edges.push_back(std::move(e));
    edge_lines.push_back(lineno);
  }
  if (n < 0) throw ParseError(lineno ? lineno : 1, "missing header 'n m r'");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(lineno, "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return checked(Hypergraph(static_cast<int>(n), std::move(edges), static_cast<int>(r)), header_line, edge_lines);
}

}  // namespace

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  try {
    int n = j.at("n").get<int>();
    int r = j.contains("r") ? j.at("r").get<int>() : 0;
    auto edges = j.at("edges").get<std::vector<Edge>>();
    Hypergraph h(n, std::move(edges), r);
    auto v = validate(h);
    if (!v.empty()) throw ParseError(0, v.front().message);
    return h;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("bad hypergraph JSON: ") + e.what());
  }
}

Hypergraph parse_hypergraph(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_hypergraph(buf.str());
}

Hypergraph parse_hypergraph(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(std::min(e.byte, text.size())), '\n'));
      throw ParseError(line, "bad JSON");
    }
    return hypergraph_from_json(j);
  }
  std::istringstream in(text);
  return parse_text(in);
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  return parse_hypergraph(f);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h, const std::vector<std::string>& header) {
  for (const auto& line : header) out << "# " << line << '\n';
  out << h.n() << ' ' << h.m() << ' ' << h.r() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
}

std::string to_text(const Hypergraph& h, const std::vector<std::string>& header) {
  std::ostringstream s;
  write_hypergraph(s, h, header);
  return s.str();
}

nlohmann::json to_json(const Hypergraph& h) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : h.edges()) edges.push_back(e);
  return {{"n", h.n()}, {"r", h.r()}, {"edges", edges}};
}

}  // namespace berge
