#include "hallmatch/corpus.hpp"

#include <array>
#include <random>

namespace hallmatch {

namespace {

bool has_loop(const SymmetricGraph& g) {
  for (const auto& e : g.edges()) {
    if (e.tail == e.head) return true;
  }
  return false;
}

void add(std::vector<CorpusGraph>& out, std::string name, SymmetricGraph g) {
  const bool loopless = !has_loop(g);
  out.push_back({std::move(name), std::move(g), loopless});
}

}  // namespace

std::vector<CorpusGraph> small_graph_corpus() {
  std::vector<CorpusGraph> out;
  for (std::size_t n = 0; n <= 8; ++n) add(out, "P" + std::to_string(n), path_graph(n));
  for (std::size_t n = 1; n <= 8; ++n) add(out, "C" + std::to_string(n), cycle_graph(n));
  for (std::size_t n = 1; n <= 8; ++n) add(out, "K" + std::to_string(n), complete_graph(n));

  std::mt19937_64 rng(20240611);
  for (std::size_t trial = 0; trial < 40; ++trial) {
    const std::size_t nv = 2 + trial % 7;
    std::bernoulli_distribution keep(0.25 + 0.05 * static_cast<double>(trial % 10));
    std::vector<UndirectedEdge> edges;
    for (std::size_t u = 0; u < nv; ++u) {
      for (std::size_t v = u + 1; v < nv; ++v) {
        if (keep(rng)) edges.emplace_back(u, v);
      }
    }
    add(out, "G(" + std::to_string(nv) + ")#" + std::to_string(trial), SymmetricGraph::from_undirected(nv, edges));
  }

  const std::array<SymmetricGraph, 2> c3c3{cycle_graph(3), cycle_graph(3)};
  add(out, "C3+C3", disjoint_union(c3c3));
  const std::array<SymmetricGraph, 3> mixed{cycle_graph(2), path_graph(2), cycle_graph(4)};
  add(out, "C2+P2+C4", disjoint_union(mixed));
  const std::array<SymmetricGraph, 2> pk{path_graph(3), complete_graph(5)};
  add(out, "P3+K5", disjoint_union(pk));

  std::uniform_int_distribution<std::size_t> pick(0, 5);
  for (std::size_t trial = 0; trial < 20; ++trial) {
    const std::size_t nv = 3 + trial % 4;
    std::vector<UndirectedEdge> edges;
    const std::size_t count = 3 + trial % 6;
    for (std::size_t i = 0; i < count; ++i) edges.emplace_back(pick(rng) % nv, pick(rng) % nv);
    add(out, "multi(" + std::to_string(nv) + ")#" + std::to_string(trial), SymmetricGraph::from_undirected(nv, edges));
  }
  const std::vector<UndirectedEdge> looped{{0, 0}, {0, 1}, {0, 1}, {1, 2}, {2, 2}, {2, 2}};
  add(out, "loops+parallel", SymmetricGraph::from_undirected(3, looped));
  return out;
}

}  // namespace hallmatch
