#include "hallmatch/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hallmatch/errors.hpp"

namespace hallmatch {

SymmetricGraph::SymmetricGraph(std::size_t num_vertices, std::vector<DirectedEdge> edges,
                               std::vector<std::size_t> tau)
    : num_vertices_(num_vertices), edges_(std::move(edges)), tau_(std::move(tau)), pieces_{0, num_vertices} {
  if (tau_.size() != edges_.size()) throw Error(Errc::kInvalidGraph, "tau table size differs from edge count");
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& edge = edges_[e];
    if (edge.tail >= num_vertices_ || edge.head >= num_vertices_) {
      throw Error(Errc::kInvalidGraph, "edge " + std::to_string(e) + " has an endpoint out of range");
    }
    const std::size_t partner = tau_[e];
    if (partner >= edges_.size() || partner == e || tau_[partner] != e) {
      throw Error(Errc::kInvalidGraph, "tau is not a fixed-point-free involution at edge " + std::to_string(e));
    }
    if (edges_[partner].tail != edge.head || edges_[partner].head != edge.tail) {
      throw Error(Errc::kInvalidGraph, "tau does not reverse edge " + std::to_string(e));
    }
  }
}

SymmetricGraph SymmetricGraph::from_undirected(std::size_t num_vertices, std::span<const UndirectedEdge> edges) {
  std::vector<DirectedEdge> directed;
  std::vector<std::size_t> tau;
  directed.reserve(2 * edges.size());
  tau.reserve(2 * edges.size());
  for (const auto& [u, v] : edges) {
    const std::size_t base = directed.size();
    directed.push_back({u, v});
    directed.push_back({v, u});
    tau.push_back(base + 1);
    tau.push_back(base);
  }
  return SymmetricGraph(num_vertices, std::move(directed), std::move(tau));
}

std::vector<GeometricEdge> SymmetricGraph::geometric_edges() const {
  std::vector<GeometricEdge> out;
  out.reserve(edges_.size() / 2);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (e < tau_[e]) out.push_back({e, tau_[e]});
  }
  return out;
}

std::vector<UndirectedEdge> SymmetricGraph::to_undirected() const {
  std::vector<UndirectedEdge> out;
  for (const auto& g : geometric_edges()) out.emplace_back(edges_[g.representative].tail, edges_[g.representative].head);
  return out;
}

std::vector<std::size_t> SymmetricGraph::out_edges(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].tail == v) out.push_back(e);
  }
  return out;
}

SymmetricGraph path_graph(std::size_t n) {
  std::vector<UndirectedEdge> edges;
  for (std::size_t j = 0; j + 1 < n; ++j) edges.emplace_back(j, j + 1);
  return SymmetricGraph::from_undirected(n, edges);
}

SymmetricGraph cycle_graph(std::size_t n) {
  std::vector<UndirectedEdge> edges;
  for (std::size_t j = 0; j < n; ++j) edges.emplace_back(j, (j + 1) % n);
  return SymmetricGraph::from_undirected(n, edges);
}

SymmetricGraph complete_graph(std::size_t n) {
  std::vector<UndirectedEdge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return SymmetricGraph::from_undirected(n, edges);
}

SymmetricGraph disjoint_union(std::span<const SymmetricGraph> graphs) {
  std::size_t nv = 0;
  std::vector<DirectedEdge> edges;
  std::vector<std::size_t> tau;
  std::vector<std::size_t> pieces{0};
  for (const auto& g : graphs) {
    const std::size_t eoff = edges.size();
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      edges.push_back({g.tail(e) + nv, g.head(e) + nv});
      tau.push_back(g.tau(e) + eoff);
    }
    nv += g.num_vertices();
    pieces.push_back(nv);
  }
  SymmetricGraph out(nv, std::move(edges), std::move(tau));
  out.pieces_ = std::move(pieces);
  return out;
}

Morphism identity_morphism(const SymmetricGraph& g) {
  Morphism f;
  f.vertex_map.resize(g.num_vertices());
  f.edge_map.resize(g.num_edges());
  std::iota(f.vertex_map.begin(), f.vertex_map.end(), std::size_t{0});
  std::iota(f.edge_map.begin(), f.edge_map.end(), std::size_t{0});
  return f;
}

Morphism cycle_projection(std::size_t lift, std::size_t n) {
  if (n == 0) throw Error(Errc::kInvalidArgument, "cycle_projection needs n >= 1");
  Morphism f;
  const std::size_t total = lift * n;
  for (std::size_t j = 0; j < total; ++j) f.vertex_map.push_back(j % n);
  for (std::size_t j = 0; j < total; ++j) {
    f.edge_map.push_back(2 * (j % n));
    f.edge_map.push_back(2 * (j % n) + 1);
  }
  return f;
}

bool is_morphism(const Morphism& f, const SymmetricGraph& g1, const SymmetricGraph& g2) {
  if (f.vertex_map.size() != g1.num_vertices() || f.edge_map.size() != g1.num_edges()) {
    throw Error(Errc::kDomainMismatch, "morphism tables do not match the source graph");
  }
  for (std::size_t v : f.vertex_map) {
    if (v >= g2.num_vertices()) throw Error(Errc::kDomainMismatch, "vertex image out of range");
  }
  for (std::size_t e : f.edge_map) {
    if (e >= g2.num_edges()) throw Error(Errc::kDomainMismatch, "edge image out of range");
  }
  for (std::size_t e = 0; e < g1.num_edges(); ++e) {
    const std::size_t fe = f.edge_map[e];
    if (g2.tail(fe) != f.vertex_map[g1.tail(e)] || g2.head(fe) != f.vertex_map[g1.head(e)]) return false;
    if (f.edge_map[g1.tau(e)] != g2.tau(fe)) return false;
  }
  return true;
}

bool is_cover(const Morphism& f, const SymmetricGraph& h, const SymmetricGraph& g) {
  if (!is_morphism(f, h, g)) throw Error(Errc::kNotAMorphism, "is_cover needs a morphism");
  std::vector<bool> hit_v(g.num_vertices(), false);
  std::vector<bool> hit_e(g.num_edges(), false);
  for (std::size_t v : f.vertex_map) hit_v[v] = true;
  for (std::size_t e : f.edge_map) hit_e[e] = true;
  if (std::find(hit_v.begin(), hit_v.end(), false) != hit_v.end()) return false;
  if (std::find(hit_e.begin(), hit_e.end(), false) != hit_e.end()) return false;

  std::vector<std::vector<std::size_t>> out_h(h.num_vertices());
  std::vector<std::size_t> out_g_count(g.num_vertices(), 0);
  for (std::size_t e = 0; e < h.num_edges(); ++e) out_h[h.tail(e)].push_back(e);
  for (std::size_t e = 0; e < g.num_edges(); ++e) ++out_g_count[g.tail(e)];

  for (std::size_t w = 0; w < h.num_vertices(); ++w) {
    const std::size_t base = f.vertex_map[w];
    if (out_h[w].size() != out_g_count[base]) return false;
    std::vector<std::size_t> images;
    for (std::size_t e : out_h[w]) images.push_back(f.edge_map[e]);
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
  }
  return true;
}

std::optional<std::size_t> cover_degree(const Morphism& f, const SymmetricGraph& h, const SymmetricGraph& g) {
  if (g.num_vertices() == 0 || !is_cover(f, h, g)) return std::nullopt;
  std::vector<std::size_t> fiber(g.num_vertices(), 0);
  for (std::size_t v : f.vertex_map) ++fiber[v];
  if (std::adjacent_find(fiber.begin(), fiber.end(), std::not_equal_to<>()) != fiber.end()) return std::nullopt;
  return fiber.front();
}

namespace {

bool is_bijection(std::span<const std::size_t> table, std::size_t codomain) {
  if (table.size() != codomain) return false;
  std::vector<bool> seen(codomain, false);
  for (std::size_t x : table) {
    if (x >= codomain || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

}  // namespace

bool is_isomorphism(const Morphism& f, const SymmetricGraph& g1, const SymmetricGraph& g2) {
  return is_morphism(f, g1, g2) && is_bijection(f.vertex_map, g2.num_vertices()) &&
         is_bijection(f.edge_map, g2.num_edges());
}

std::optional<Morphism> invert(const Morphism& f, const SymmetricGraph& g1, const SymmetricGraph& g2) {
  if (!is_bijection(f.vertex_map, g2.num_vertices()) || !is_bijection(f.edge_map, g2.num_edges())) {
    return std::nullopt;
  }
  (void)g1;
  Morphism inv;
  inv.vertex_map.resize(f.vertex_map.size());
  inv.edge_map.resize(f.edge_map.size());
  for (std::size_t v = 0; v < f.vertex_map.size(); ++v) inv.vertex_map[f.vertex_map[v]] = v;
  for (std::size_t e = 0; e < f.edge_map.size(); ++e) inv.edge_map[f.edge_map[e]] = e;
  return inv;
}

std::vector<std::size_t> connected_components(const SymmetricGraph& g) {
  std::vector<std::size_t> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& edge : g.edges()) {
    const std::size_t a = find(edge.tail);
    const std::size_t b = find(edge.head);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> id(g.num_vertices());
  std::vector<std::size_t> remap(g.num_vertices(), g.num_vertices());
  std::size_t next = 0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const std::size_t root = find(v);
    if (remap[root] == g.num_vertices()) remap[root] = next++;
    id[v] = remap[root];
  }
  return id;
}

std::vector<std::size_t> component_profile(const SymmetricGraph& h) {
  std::vector<std::size_t> degree(h.num_vertices(), 0);
  for (const auto& edge : h.edges()) ++degree[edge.tail];
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    if (degree[v] != 2) {
      throw Error(Errc::kNotDisjointCycles, "vertex " + std::to_string(v) + " has degree " + std::to_string(degree[v]));
    }
  }
  const auto id = connected_components(h);
  std::vector<std::size_t> sizes;
  for (std::size_t v = 0; v < id.size(); ++v) {
    if (id[v] >= sizes.size()) sizes.resize(id[v] + 1, 0);
    ++sizes[id[v]];
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace hallmatch
