#pragma once

// Bijections behind d! a(P_d, m) = sum_sigma a(G_sigma, m)
//                                = 2^m (d-m)! a(K_d, m).
//
// Labels are 0..d-1. A path diagram is a permutation written as the bottom
// row b_0 .. b_(d-1) over a rightward path together with a matching of that
// path; bit p of the path matching joins positions p and p+1. A matching of
// the functional graph G_sigma (arcs s -> sigma(s)) is the mask of its arc
// sources.
//
// tau_M swaps the two ends of every matched arc. Permutations built from it
// apply tau_M first: sigma(x) = sigma'(tau_M(x)).

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "hallmatch/bigint.hpp"
#include "hallmatch/graph.hpp"
#include "hallmatch/permutation.hpp"

namespace hallmatch {

struct PathDiagram {
  Permutation perm;             // bottom row: b_p = perm(p)
  std::uint32_t matching = 0;   // path edges (p, p+1)

  std::size_t d() const noexcept { return perm.degree(); }
  friend bool operator==(const PathDiagram&, const PathDiagram&) = default;
};

struct FunctionalMatching {
  Permutation sigma;
  std::uint32_t sources = 0;

  friend bool operator==(const FunctionalMatching&, const FunctionalMatching&) = default;
};

struct DirectedKMatching {
  std::size_t d = 0;
  /// (source, target) pairs sorted by source.
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  /// A permutation of the non-target vertices; targets are fixed points.
  Permutation free_perm;

  friend bool operator==(const DirectedKMatching&, const DirectedKMatching&) = default;
};

/// G_sigma as an undirected multigraph: fixed points are loops, 2-cycles are
/// double edges.
SymmetricGraph functional_graph(const Permutation& sigma);

/// a(G_sigma, m).
BigInt functional_graph_matchings(const Permutation& sigma, std::size_t m);

bool is_path_matching(std::uint32_t mask, std::size_t d);
bool is_functional_matching(const Permutation& sigma, std::uint32_t sources);
bool is_directed_matching(const DirectedKMatching& dm);

/// Labels that are not the right end of a matched path edge.
std::vector<std::size_t> left_ends(const PathDiagram& diag);

/// Top row of the two-line picture: left-end positions receive the sorted
/// left-end labels in order, every other position repeats its bottom label.
std::vector<std::size_t> top_row(const PathDiagram& diag);

/// tau_M for a set of disjoint ordered pairs.
Permutation pair_swap(std::size_t d, const std::vector<std::pair<std::size_t, std::size_t>>& arcs);

std::vector<std::pair<std::size_t, std::size_t>> arcs_of(const FunctionalMatching& fm);

FunctionalMatching bij_gp_forward(const PathDiagram& diag);
/// Throws kNotAMatching when fm.sources is not a matching of G_sigma.
PathDiagram bij_gp_inverse(const FunctionalMatching& fm);

DirectedKMatching bij_kp_forward(const PathDiagram& diag);
/// Throws kNotAMatching when dm is not a directed matching.
PathDiagram bij_kp_inverse(const DirectedKMatching& dm);

/// Throws kNotAMatching when dm is not a directed matching.
FunctionalMatching bij_gk_forward(const DirectedKMatching& dm);
/// Throws kNotAMatching when fm.sources is not a matching of G_sigma.
DirectedKMatching bij_gk_inverse(const FunctionalMatching& fm);

/// Every path diagram of size d, permutations in lexicographic order.
std::vector<PathDiagram> all_path_diagrams(std::size_t d);
/// Every matching of G_sigma for every sigma in S_d.
std::vector<FunctionalMatching> all_functional_matchings(std::size_t d);
/// Every directed matching of K_d with every permutation of its non-targets.
std::vector<DirectedKMatching> all_directed_matchings(std::size_t d);

}  // namespace hallmatch
