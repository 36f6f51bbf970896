#pragma once

// Symmetric graphs: every undirected edge is stored as two directed edges
// exchanged by a fixed-point-free involution tau, with t(tau e) = h(e) and
// h(tau e) = t(e). Loops and parallel edges are allowed.
//
// Vertices and edges are dense indices. For the path and cycle graphs the
// edge j+ (j -> j+1) is index 2j and j- (j+1 -> j) is index 2j+1, so tau
// flips the low bit there; covers built from labelings use their own
// indexing and carry tau explicitly.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hallmatch {

struct DirectedEdge {
  std::size_t tail;
  std::size_t head;

  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

/// The pair {e, tau(e)}, named by its smaller index.
struct GeometricEdge {
  std::size_t representative;
  std::size_t partner;
};

using UndirectedEdge = std::pair<std::size_t, std::size_t>;

class SymmetricGraph {
 public:
  SymmetricGraph() = default;

  /// Throws kInvalidGraph unless endpoints are in range and tau satisfies
  /// tau(e) != e, tau(tau(e)) = e, t(tau e) = h(e), h(tau e) = t(e).
  SymmetricGraph(std::size_t num_vertices, std::vector<DirectedEdge> edges, std::vector<std::size_t> tau);

  /// Splits each undirected edge i into directed edges 2i (u -> v) and
  /// 2i+1 (v -> u).
  static SymmetricGraph from_undirected(std::size_t num_vertices, std::span<const UndirectedEdge> edges);

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::size_t tail(std::size_t e) const { return edges_[e].tail; }
  std::size_t head(std::size_t e) const { return edges_[e].head; }
  std::size_t tau(std::size_t e) const { return tau_[e]; }
  std::span<const DirectedEdge> edges() const noexcept { return edges_; }

  std::vector<GeometricEdge> geometric_edges() const;

  /// One (tail, head) pair per geometric edge, in representative order.
  std::vector<UndirectedEdge> to_undirected() const;

  /// Directed edges with tail v. A loop at v contributes both of its halves.
  std::vector<std::size_t> out_edges(std::size_t v) const;

  /// Vertex offsets of the pieces this graph was assembled from by
  /// disjoint_union (one entry more than the piece count); {0, num_vertices}
  /// for a graph built directly.
  std::span<const std::size_t> piece_offsets() const noexcept { return pieces_; }

 private:
  friend SymmetricGraph disjoint_union(std::span<const SymmetricGraph> graphs);

  std::size_t num_vertices_ = 0;
  std::vector<DirectedEdge> edges_;
  std::vector<std::size_t> tau_;
  std::vector<std::size_t> pieces_{0};
};

/// P_n; P_0 is the empty graph.
SymmetricGraph path_graph(std::size_t n);

/// C_n on Z/nZ; C_1 is a single loop, C_2 a double edge, C_0 empty.
SymmetricGraph cycle_graph(std::size_t n);

SymmetricGraph complete_graph(std::size_t n);

SymmetricGraph disjoint_union(std::span<const SymmetricGraph> graphs);

struct Morphism {
  std::vector<std::size_t> vertex_map;
  std::vector<std::size_t> edge_map;
};

Morphism identity_morphism(const SymmetricGraph& g);

/// pi_l : C_{l n} -> C_n, reducing vertex and edge labels mod n.
Morphism cycle_projection(std::size_t lift, std::size_t n);

/// Pointwise check that f commutes with (t, h) and with tau. Throws
/// kDomainMismatch when the tables have the wrong size or point outside g2.
bool is_morphism(const Morphism& f, const SymmetricGraph& g1, const SymmetricGraph& g2);

/// f is surjective and bijective from the out-edges of every vertex of h onto
/// the out-edges of its image. The out-edges of a vertex carry one half of
/// every incident edge (both halves of a loop), so this is the neighborhood
/// condition. Throws kNotAMorphism when f is not a morphism.
bool is_cover(const Morphism& f, const SymmetricGraph& h, const SymmetricGraph& g);

/// Common fiber size of a cover, or nullopt when f is not a cover or the
/// fibers differ in size (a disconnected base).
std::optional<std::size_t> cover_degree(const Morphism& f, const SymmetricGraph& h, const SymmetricGraph& g);

/// A morphism whose vertex and edge maps are both bijections.
bool is_isomorphism(const Morphism& f, const SymmetricGraph& g1, const SymmetricGraph& g2);

/// The inverse tables of a bijective f; nullopt if f is not bijective.
std::optional<Morphism> invert(const Morphism& f, const SymmetricGraph& g1, const SymmetricGraph& g2);

/// Sizes of the connected components (ascending) of a graph in which every
/// vertex has exactly two out-edges, i.e. a disjoint union of cycles.
/// Throws kNotDisjointCycles otherwise.
std::vector<std::size_t> component_profile(const SymmetricGraph& h);

/// Connected components of any graph as a vertex -> component id table.
std::vector<std::size_t> connected_components(const SymmetricGraph& g);

}  // namespace hallmatch
