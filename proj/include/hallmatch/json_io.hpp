#pragma once

// JSON forms used by the command line tool.
//
//   polynomial: {"coeffs": ["a0", "a1", ...]}  decimal strings, ascending
//   graph:      {"num_vertices": N, "edges": [[u, v], ...]}  0-based; [u, u]
//               is a loop and repeated pairs are parallel edges

#include <string_view>

#include "json.hpp"

#include "hallmatch/graph.hpp"
#include "hallmatch/poly.hpp"

namespace hallmatch {

nlohmann::json polynomial_to_json(const Polynomial& p);
/// Throws kParseError on a missing field or a non-integer coefficient.
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json graph_to_json(const SymmetricGraph& g);
/// Throws kParseError on malformed input, including endpoints out of range.
SymmetricGraph graph_from_json(const nlohmann::json& j);
SymmetricGraph parse_graph(std::string_view text);

}  // namespace hallmatch
