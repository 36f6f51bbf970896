#include <set>

#include "doctest.h"
#include "error_code.hpp"

#include "hallmatch/corpus.hpp"
#include "hallmatch/graph.hpp"

using namespace hallmatch;

namespace {

std::size_t geometric_count(const SymmetricGraph& g) { return g.geometric_edges().size(); }

void check_symmetric(const SymmetricGraph& g) {
  CHECK(g.num_edges() % 2 == 0);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    CHECK(g.tau(e) != e);
    CHECK(g.tau(g.tau(e)) == e);
    CHECK(g.tail(g.tau(e)) == g.head(e));
    CHECK(g.head(g.tau(e)) == g.tail(e));
  }
}

}  // namespace

TEST_CASE("paths and cycles") {
  CHECK(path_graph(0).num_vertices() == 0);
  CHECK(path_graph(0).num_edges() == 0);
  CHECK(path_graph(1).num_vertices() == 1);
  CHECK(path_graph(1).num_edges() == 0);
  const auto p3 = path_graph(3);
  CHECK(p3.num_vertices() == 3);
  CHECK(p3.num_edges() == 4);
  CHECK(geometric_count(p3) == 2);

  const auto c2 = cycle_graph(2);
  CHECK(c2.num_vertices() == 2);
  CHECK(geometric_count(c2) == 2);
  for (const auto& [u, v] : c2.to_undirected()) CHECK(u != v);
  const auto c1 = cycle_graph(1);
  CHECK(c1.num_vertices() == 1);
  REQUIRE(geometric_count(c1) == 1);
  CHECK(c1.to_undirected()[0] == UndirectedEdge{0, 0});
  CHECK(c1.out_edges(0).size() == 2);
  CHECK(geometric_count(cycle_graph(4)) == 4);
  CHECK(cycle_graph(0).num_vertices() == 0);

  // j+ is 2j, j- is 2j+1.
  const auto c5 = cycle_graph(5);
  for (std::size_t j = 0; j < 5; ++j) {
    CHECK(c5.tail(2 * j) == j);
    CHECK(c5.head(2 * j) == (j + 1) % 5);
    CHECK(c5.tau(2 * j) == 2 * j + 1);
  }
  for (std::size_t n = 0; n < 8; ++n) {
    check_symmetric(path_graph(n));
    check_symmetric(cycle_graph(n));
    check_symmetric(complete_graph(n));
  }
  CHECK(geometric_count(complete_graph(6)) == 15);
}

TEST_CASE("constructor validation") {
  CHECK(error_code([] { SymmetricGraph(2, {{0, 1}, {1, 0}}, {1, 0}); }) == std::nullopt);
  CHECK(error_code([] { SymmetricGraph(2, {{0, 1}, {1, 0}}, {0, 1}); }) == Errc::kInvalidGraph);
  CHECK(error_code([] { SymmetricGraph(2, {{0, 1}, {0, 1}}, {1, 0}); }) == Errc::kInvalidGraph);
  CHECK(error_code([] { SymmetricGraph(2, {{0, 2}, {2, 0}}, {1, 0}); }) == Errc::kInvalidGraph);
  CHECK(error_code([] { SymmetricGraph(2, {{0, 1}, {1, 0}}, {1}); }) == Errc::kInvalidGraph);
  CHECK(error_code([] { SymmetricGraph(2, {{0, 1}, {1, 0}, {0, 0}}, {1, 0, 2}); }) == Errc::kInvalidGraph);
  const std::vector<UndirectedEdge> bad{{0, 3}};
  CHECK(error_code([&] { SymmetricGraph::from_undirected(3, bad); }) == Errc::kInvalidGraph);
}

TEST_CASE("undirected round trip") {
  for (const auto& entry : small_graph_corpus()) {
    CAPTURE(entry.name);
    const auto edges = entry.graph.to_undirected();
    const auto rebuilt = SymmetricGraph::from_undirected(entry.graph.num_vertices(), edges);
    CHECK(rebuilt.to_undirected() == edges);
    CHECK(rebuilt.num_edges() == entry.graph.num_edges());
    check_symmetric(entry.graph);
  }
  const std::vector<UndirectedEdge> multi{{0, 1}, {1, 1}, {0, 1}, {2, 0}};
  const auto g = SymmetricGraph::from_undirected(3, multi);
  CHECK(g.to_undirected() == multi);
}

TEST_CASE("disjoint_union") {
  const auto empty = disjoint_union({});
  CHECK(empty.num_vertices() == 0);
  CHECK(empty.num_edges() == 0);
  const std::vector<SymmetricGraph> two{cycle_graph(3), cycle_graph(3)};
  const auto u = disjoint_union(two);
  CHECK(u.num_vertices() == 6);
  const auto comp = connected_components(u);
  CHECK(std::set<std::size_t>(comp.begin(), comp.end()).size() == 2);
  CHECK(std::vector<std::size_t>(u.piece_offsets().begin(), u.piece_offsets().end()) == std::vector<std::size_t>{0, 3, 6});
  const std::vector<SymmetricGraph> mixed{cycle_graph(2), cycle_graph(4)};
  CHECK(component_profile(disjoint_union(mixed)) == std::vector<std::size_t>{2, 4});
  check_symmetric(disjoint_union(mixed));
}

TEST_CASE("is_morphism") {
  const auto c4 = cycle_graph(4);
  CHECK(is_morphism(identity_morphism(c4), c4, c4));
  CHECK(is_morphism(cycle_projection(2, 3), cycle_graph(6), cycle_graph(3)));
  const auto p3 = path_graph(3);
  Morphism swap = identity_morphism(p3);
  std::swap(swap.vertex_map[0], swap.vertex_map[1]);
  CHECK_FALSE(is_morphism(swap, p3, p3));
  // Endpoints commute but tau does not: the reverse half of the first copy
  // of the double edge goes to the reverse half of the second copy.
  const auto c2 = cycle_graph(2);
  Morphism twist = identity_morphism(c2);
  twist.edge_map[1] = 2;
  CHECK_FALSE(is_morphism(twist, c2, c2));
  Morphism short_table = identity_morphism(c4);
  short_table.vertex_map.pop_back();
  CHECK(error_code([&] { is_morphism(short_table, c4, c4); }) == Errc::kDomainMismatch);
  Morphism out_of_range = identity_morphism(c4);
  out_of_range.vertex_map[0] = 9;
  CHECK(error_code([&] { is_morphism(out_of_range, c4, c4); }) == Errc::kDomainMismatch);
}

TEST_CASE("is_cover") {
  const auto c3 = cycle_graph(3);
  CHECK(is_cover(cycle_projection(2, 3), cycle_graph(6), c3));
  CHECK(cover_degree(cycle_projection(2, 3), cycle_graph(6), c3) == 2u);
  for (std::size_t l = 1; l <= 4; ++l) {
    for (std::size_t n = 1; n <= 4; ++n) {
      CAPTURE(l);
      CAPTURE(n);
      CHECK(cover_degree(cycle_projection(l, n), cycle_graph(l * n), cycle_graph(n)) == l);
    }
  }

  const std::vector<SymmetricGraph> two{c3, c3};
  const auto h = disjoint_union(two);
  Morphism pi;
  for (std::size_t v = 0; v < 6; ++v) pi.vertex_map.push_back(v % 3);
  for (std::size_t e = 0; e < 12; ++e) pi.edge_map.push_back(e % 6);
  CHECK(is_cover(pi, h, c3));
  CHECK(cover_degree(pi, h, c3) == 2u);

  // A morphism that is not locally bijective: C_6 wrapped twice onto C_3 is
  // a cover, but P_3 folded onto one edge of C_3 is not.
  Morphism fold{{0, 1, 0}, {0, 1, 1, 0}};
  CHECK(is_morphism(fold, path_graph(3), c3));
  CHECK_FALSE(is_cover(fold, path_graph(3), c3));

  Morphism constant{{0, 0, 0}, std::vector<std::size_t>(6, 0)};
  CHECK(error_code([&] { is_cover(constant, c3, c3); }) == Errc::kNotAMorphism);
}

TEST_CASE("isomorphisms and inverses") {
  const auto c5 = cycle_graph(5);
  Morphism rot;
  for (std::size_t v = 0; v < 5; ++v) rot.vertex_map.push_back((v + 1) % 5);
  for (std::size_t e = 0; e < 10; ++e) rot.edge_map.push_back((e + 2) % 10);
  CHECK(is_isomorphism(rot, c5, c5));
  const auto inv = invert(rot, c5, c5);
  REQUIRE(inv.has_value());
  CHECK(is_isomorphism(*inv, c5, c5));
  for (std::size_t v = 0; v < 5; ++v) CHECK(inv->vertex_map[rot.vertex_map[v]] == v);
  CHECK_FALSE(invert(cycle_projection(2, 3), cycle_graph(6), cycle_graph(3)).has_value());
  CHECK_FALSE(is_isomorphism(cycle_projection(2, 3), cycle_graph(6), cycle_graph(3)));
}

TEST_CASE("component_profile") {
  CHECK(component_profile(cycle_graph(4)) == std::vector<std::size_t>{4});
  CHECK(component_profile(cycle_graph(1)) == std::vector<std::size_t>{1});
  CHECK(component_profile(cycle_graph(0)).empty());
  CHECK(error_code([] { component_profile(path_graph(3)); }) == Errc::kNotDisjointCycles);
  CHECK(error_code([] { component_profile(complete_graph(4)); }) == Errc::kNotDisjointCycles);
}

TEST_CASE("connected_components on the corpus") {
  for (const auto& entry : small_graph_corpus()) {
    const auto comp = connected_components(entry.graph);
    CHECK(comp.size() == entry.graph.num_vertices());
    for (const auto& [u, v] : entry.graph.to_undirected()) CHECK(comp[u] == comp[v]);
  }
}

TEST_CASE("corpus shape") {
  const auto corpus = small_graph_corpus();
  CHECK(corpus.size() >= 80);
  for (const auto& entry : corpus) {
    CHECK(entry.graph.num_vertices() <= 8);
    bool loops = false;
    for (const auto& [u, v] : entry.graph.to_undirected()) loops = loops || u == v;
    CHECK(entry.loopless == !loops);
  }
  CHECK(small_graph_corpus().size() == corpus.size());
}
