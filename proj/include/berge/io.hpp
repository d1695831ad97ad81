#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "berge/hypergraph.hpp"

namespace berge {

// Text format: `#` lines are comments, first data line is `n m r`, then m edge
// lines. A document starting with `{` is read as the JSON mirror instead.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(const std::string& text);
Hypergraph read_hypergraph_file(const std::string& path);

// Header lines are written as `# ` comments before the data.
void write_hypergraph(std::ostream& out, const Hypergraph& h, const std::vector<std::string>& header = {});
std::string to_text(const Hypergraph& h, const std::vector<std::string>& header = {});

nlohmann::json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& j);

}  // namespace berge
