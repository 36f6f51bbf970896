#include <random>

#include "doctest.h"
#include "error_code.hpp"
#include "oracles.hpp"

#include "hallmatch/corpus.hpp"
#include "hallmatch/json_io.hpp"

using namespace hallmatch;
using nlohmann::json;

TEST_CASE("polynomial json") {
  CHECK(polynomial_to_json(Polynomial{2, 0, -4, 0, 1}).dump() == R"({"coeffs":["2","0","-4","0","1"]})");
  CHECK(polynomial_to_json(Polynomial{}).dump() == R"({"coeffs":[]})");
  CHECK(polynomial_from_json(json::parse(R"({"coeffs":["1", 2, "-3", "0"]})")) == Polynomial{1, 2, -3});
  const Polynomial huge = pow(Polynomial{3, -7}, 60);
  CHECK(polynomial_from_json(polynomial_to_json(huge)) == huge);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const auto p = oracle::random_polynomial(rng, 10, 1'000'000);
    CHECK(polynomial_from_json(polynomial_to_json(p)) == p);
  }
}

TEST_CASE("polynomial json errors") {
  for (const char* text : {R"([1,2])", R"({"coef":[]})", R"({"coeffs":"12"})", R"({"coeffs":[1.5]})",
                           R"({"coeffs":["12a"]})", R"({"coeffs":[""]})", R"({"coeffs":[null]})"}) {
    CAPTURE(text);
    CHECK(error_code([&] { polynomial_from_json(json::parse(text)); }) == Errc::kParseError);
  }
  CHECK(polynomial_from_json(json::parse(R"({"coeffs":["-0", "+5"]})")) == Polynomial{0, 5});
}

TEST_CASE("graph json round trip") {
  for (const auto& entry : small_graph_corpus()) {
    CAPTURE(entry.name);
    const auto j = graph_to_json(entry.graph);
    const auto back = graph_from_json(j);
    CHECK(back.to_undirected() == entry.graph.to_undirected());
    CHECK(back.num_vertices() == entry.graph.num_vertices());
    CHECK(parse_graph(j.dump()).to_undirected() == entry.graph.to_undirected());
  }
  const auto g = parse_graph(R"({"num_vertices": 3, "edges": [[0, 0], [0, 1], [0, 1]]})");
  CHECK(g.geometric_edges().size() == 3);
  CHECK(parse_graph(R"({"num_vertices": 0})").num_vertices() == 0);
  CHECK(parse_graph(R"({"num_vertices": 2, "edges": []})").num_edges() == 0);
}

TEST_CASE("graph json errors") {
  for (const char* text : {"", "{", "[]", R"({"edges": []})", R"({"num_vertices": -1})", R"({"num_vertices": "3"})",
                           R"({"num_vertices": 2, "edges": [[0, 2]]})", R"({"num_vertices": 2, "edges": [[0]]})",
                           R"({"num_vertices": 2, "edges": [[0, -1]]})", R"({"num_vertices": 2, "edges": {}})",
                           R"({"num_vertices": 2, "edges": [[0, 1, 1]]})", R"({"num_vertices": 2.5})"}) {
    CAPTURE(text);
    CHECK(error_code([&] { parse_graph(text); }) == Errc::kParseError);
  }
}

TEST_CASE("decimal parsing") {
  CHECK(parse_decimal("123456789012345678901234567890") == BigInt("123456789012345678901234567890"));
  CHECK(parse_decimal("-42") == -42);
  for (const char* bad : {"", "-", "+", "1 2", "0x10", " 5", "5 "}) {
    CAPTURE(bad);
    CHECK(error_code([&] { parse_decimal(bad); }) == Errc::kParseError);
  }
  CHECK(to_decimal(BigInt(-17)) == "-17");
}

TEST_CASE("error names") {
  CHECK(errc_name(Errc::kNotDivisible) == "NotDivisible");
  CHECK(errc_name(Errc::kBudgetExceeded) == "BudgetExceeded");
  const Error e(Errc::kParseError, "bad");
  CHECK(e.code() == Errc::kParseError);
  CHECK(std::string(e.what()).find("bad") != std::string::npos);
}
