#pragma once

// Matchings and matching polynomials.
//
// A matching is a set of geometric edges no two of which share a vertex.
// Loops are never matchable; parallel edges are distinct edges.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hallmatch/bigint.hpp"
#include "hallmatch/graph.hpp"
#include "hallmatch/poly.hpp"

namespace hallmatch {

/// Geometric-edge representatives forming a matching of some host graph.
using Matching = std::vector<std::size_t>;

/// True if every entry is a geometric-edge representative of g, no entry is
/// a loop, and no two entries share a vertex.
bool is_matching(const SymmetricGraph& g, std::span<const std::size_t> edges);

/// a(G, m) by backtracking over the geometric edges in index order.
BigInt count_matchings(const SymmetricGraph& g, std::size_t m);

/// a(G, 0), a(G, 1), ..., a(G, floor(|V|/2)).
///
/// Graphs on at most 64 vertices use a split enumeration: matchings of the
/// first half of the edges are bucketed by size as vertex masks, and every
/// matching of the second half is joined against each bucket with
/// simd::count_disjoint. Larger graphs fall back to backtracking.
std::vector<BigInt> matching_counts(const SymmetricGraph& g);

/// Backtracking-only variant of matching_counts, kept as a reference.
std::vector<BigInt> matching_counts_backtrack(const SymmetricGraph& g);

/// sum_i (-1)^i a(G, i) x^(|V| - 2i). The empty graph gives 1.
Polynomial matching_polynomial(const SymmetricGraph& g);

/// Same polynomial from M(G) = M(G - e) - M(G - {u, v}) on non-loop edges.
Polynomial matching_polynomial_recursive(const SymmetricGraph& g);

/// M(P_n) from P_0 = 1, P_1 = x, P_n = x P_(n-1) - P_(n-2).
Polynomial path_poly(std::size_t n);

/// M(C_n). C_0 = 1 (the empty graph), C_1 = x, C_2 = x^2 - 2, then the same
/// three-term recurrence as the paths.
Polynomial cycle_poly(std::size_t n);

/// a(K_d, m) = d! / (2^m m! (d - 2m)!), or 0 when 2m > d.
BigInt complete_graph_matchings(std::size_t d, std::size_t m);

}  // namespace hallmatch
