#include "hallmatch/json_io.hpp"

#include "hallmatch/errors.hpp"

namespace hallmatch {

nlohmann::json polynomial_to_json(const Polynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_decimal(c));
  return {{"coeffs", coeffs}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw Error(Errc::kParseError, "polynomial needs a \"coeffs\" array");
  }
  std::vector<BigInt> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (c.is_string()) {
      coeffs.push_back(parse_decimal(c.get<std::string>()));
    } else if (c.is_number_integer()) {
      coeffs.emplace_back(c.get<long>());
    } else {
      throw Error(Errc::kParseError, "coefficients must be integers or decimal strings");
    }
  }
  return Polynomial(std::move(coeffs));
}

nlohmann::json graph_to_json(const SymmetricGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.to_undirected()) edges.push_back({u, v});
  return {{"num_vertices", g.num_vertices()}, {"edges", edges}};
}

SymmetricGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num_vertices") || !j["num_vertices"].is_number_unsigned()) {
    throw Error(Errc::kParseError, "graph needs a non-negative integer \"num_vertices\"");
  }
  const auto nv = j["num_vertices"].get<std::size_t>();
  std::vector<UndirectedEdge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw Error(Errc::kParseError, "\"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
        throw Error(Errc::kParseError, "each edge must be a pair of vertex indices");
      }
      const auto u = e[0].get<std::size_t>();
      const auto v = e[1].get<std::size_t>();
      if (u >= nv || v >= nv) throw Error(Errc::kParseError, "edge endpoint out of range");
      edges.emplace_back(u, v);
    }
  }
  return SymmetricGraph::from_undirected(nv, edges);
}

SymmetricGraph parse_graph(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::kParseError, e.what());
  }
  return graph_from_json(j);
}

}  // namespace hallmatch
