#pragma once

// S_d-labelings and the covers they induce.
//
// A labeling sigma assigns a permutation to every directed edge with
// sigma(tau e) = sigma(e)^-1. Its cover has vertex set V x [d] and edge set
// E x [d] with
//   t(e, j) = (t(e), j),  h(e, j) = (h(e), j^sigma(e)),
//   tau(e, j) = (tau(e), j^sigma(e)).
// Vertex (v, j) is index v*d + j and edge (e, j) is index e*d + j.

#include <cstddef>
#include <span>
#include <vector>

#include "hallmatch/graph.hpp"
#include "hallmatch/permutation.hpp"

namespace hallmatch {

/// A labeling of the cycle C_n: assign[i] = lambda(i+). The label of i- is
/// assign[i]^-1 and is never stored.
struct SdLabeling {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<Permutation> assign;

  static SdLabeling trivial(std::size_t n, std::size_t d);
  friend bool operator==(const SdLabeling&, const SdLabeling&) = default;
};

struct Cover {
  SymmetricGraph graph;
  Morphism projection;
};

inline std::size_t cover_vertex(std::size_t v, std::size_t sheet, std::size_t d) { return v * d + sheet; }
inline std::size_t cover_edge(std::size_t e, std::size_t sheet, std::size_t d) { return e * d + sheet; }

/// The cover of g determined by one permutation per directed edge. Throws
/// kInvalidArgument when the labels break sigma(tau e) = sigma(e)^-1 or
/// disagree in degree.
Cover lift(const SymmetricGraph& g, std::span<const Permutation> edge_labels, std::size_t d);

/// Per-directed-edge labels of C_n: index 2i gets assign[i], 2i+1 its inverse.
std::vector<Permutation> expand_labeling(const SdLabeling& lam);

/// C_{n,lambda} with its projection onto C_n.
Cover build_cover(std::size_t n, const SdLabeling& lam);

/// lambda(0+) lambda(1+) ... lambda((n-1)+), multiplied left to right.
Permutation labeling_product(const SdLabeling& lam);

/// The explicit isomorphism C_{n,lambda} -> C_{n,mu} for labelings that agree
/// away from i0+ and (i0+1)+ and have equal products over those two edges.
/// With delta = lambda(i0+)^-1 mu(i0+), the sheets over vertex i0+1, over
/// the edge (i0+1)+ and over the edge i0- are moved by delta; everything else
/// is fixed. Throws kHypothesesViolated when the conditions fail or n < 2.
Morphism lemma1_isomorphism(const SdLabeling& lam, const SdLabeling& mu, std::size_t i0);

/// lambda^g(i+) = g^-1 lambda(i+) g.
SdLabeling conjugate_labeling(const SdLabeling& lam, const Permutation& g);

}  // namespace hallmatch
