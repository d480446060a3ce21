#pragma once

// Edge-list graph format and the command-line front end.
//
//   n=<int>       first non-comment line
//   a b           arc a -> b
//   u a b         undirected edge, both arcs
//   # ...         comment

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cayley4p/graph.hpp"
#include "cayley4p/solver.hpp"

namespace cayley4p {

/// Throws ParseError with the offending line number.
Digraph parse_graph(const std::string& text);
std::string format_graph(const Digraph& g);

nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

/// Exit codes: 0 found/yes, 1 not found/no, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cayley4p
