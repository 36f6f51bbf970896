#pragma once

// A fixed collection of small graphs for cross-checking the counters.

#include <string>
#include <vector>

#include "hallmatch/graph.hpp"

namespace hallmatch {

struct CorpusGraph {
  std::string name;
  SymmetricGraph graph;
  bool loopless;
};

/// Paths, cycles, complete graphs, seeded random simple graphs, disjoint
/// unions and multigraphs with loops, all on at most 8 vertices. The list is
/// deterministic.
std::vector<CorpusGraph> small_graph_corpus();

}  // namespace hallmatch
