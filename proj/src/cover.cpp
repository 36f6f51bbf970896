#include "hallmatch/cover.hpp"

#include <string>

#include "hallmatch/errors.hpp"

namespace hallmatch {

SdLabeling SdLabeling::trivial(std::size_t n, std::size_t d) {
  return SdLabeling{n, d, std::vector<Permutation>(n, Permutation::identity(d))};
}

namespace {

void check_labeling(const SdLabeling& lam) {
  if (lam.assign.size() != lam.n) throw Error(Errc::kInvalidArgument, "labeling has the wrong number of edges");
  for (const auto& p : lam.assign) {
    if (p.degree() != lam.d) throw Error(Errc::kInvalidArgument, "labeling mixes permutation degrees");
  }
}

}  // namespace

Cover lift(const SymmetricGraph& g, std::span<const Permutation> edge_labels, std::size_t d) {
  if (edge_labels.size() != g.num_edges()) throw Error(Errc::kInvalidArgument, "one label per directed edge expected");
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (edge_labels[e].degree() != d) throw Error(Errc::kInvalidArgument, "label degree differs from d");
    if (edge_labels[g.tau(e)] != edge_labels[e].inverse()) {
      throw Error(Errc::kInvalidArgument, "labels of e and tau(e) are not inverse at edge " + std::to_string(e));
    }
  }

  std::vector<DirectedEdge> edges(g.num_edges() * d);
  std::vector<std::size_t> tau(g.num_edges() * d);
  Morphism proj;
  proj.vertex_map.resize(g.num_vertices() * d);
  proj.edge_map.resize(g.num_edges() * d);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    for (std::size_t j = 0; j < d; ++j) proj.vertex_map[cover_vertex(v, j, d)] = v;
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Permutation& s = edge_labels[e];
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t idx = cover_edge(e, j, d);
      edges[idx] = {cover_vertex(g.tail(e), j, d), cover_vertex(g.head(e), s(j), d)};
      tau[idx] = cover_edge(g.tau(e), s(j), d);
      proj.edge_map[idx] = e;
    }
  }
  return Cover{SymmetricGraph(g.num_vertices() * d, std::move(edges), std::move(tau)), std::move(proj)};
}

std::vector<Permutation> expand_labeling(const SdLabeling& lam) {
  check_labeling(lam);
  std::vector<Permutation> out;
  out.reserve(2 * lam.n);
  for (const auto& p : lam.assign) {
    out.push_back(p);
    out.push_back(p.inverse());
  }
  return out;
}

Cover build_cover(std::size_t n, const SdLabeling& lam) {
  if (lam.n != n) throw Error(Errc::kInvalidArgument, "labeling is for a different cycle length");
  const auto labels = expand_labeling(lam);
  return lift(cycle_graph(n), labels, lam.d);
}

Permutation labeling_product(const SdLabeling& lam) {
  check_labeling(lam);
  return product(lam.assign, lam.d);
}

Morphism lemma1_isomorphism(const SdLabeling& lam, const SdLabeling& mu, std::size_t i0) {
  check_labeling(lam);
  check_labeling(mu);
  const std::size_t n = lam.n;
  const std::size_t d = lam.d;
  if (mu.n != n || mu.d != d) throw Error(Errc::kHypothesesViolated, "labelings have different shapes");
  if (n < 2) throw Error(Errc::kHypothesesViolated, "need n >= 2");
  if (i0 >= n) throw Error(Errc::kHypothesesViolated, "i0 out of range");
  const std::size_t l0 = (i0 + 1) % n;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != i0 && i != l0 && lam.assign[i] != mu.assign[i]) {
      throw Error(Errc::kHypothesesViolated, "labelings differ at edge " + std::to_string(i));
    }
  }
  if (lam.assign[i0] * lam.assign[l0] != mu.assign[i0] * mu.assign[l0]) {
    throw Error(Errc::kHypothesesViolated, "products over the two edges differ");
  }

  const Permutation delta = lam.assign[i0].inverse() * mu.assign[i0];
  Morphism f;
  f.vertex_map.resize(n * d);
  f.edge_map.resize(2 * n * d);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t j = 0; j < d; ++j) {
      f.vertex_map[cover_vertex(v, j, d)] = cover_vertex(v, v == l0 ? delta(j) : j, d);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t plus = 2 * i;
      const std::size_t minus = 2 * i + 1;
      f.edge_map[cover_edge(plus, j, d)] = cover_edge(plus, i == l0 ? delta(j) : j, d);
      f.edge_map[cover_edge(minus, j, d)] = cover_edge(minus, i == i0 ? delta(j) : j, d);
    }
  }
  return f;
}

SdLabeling conjugate_labeling(const SdLabeling& lam, const Permutation& g) {
  check_labeling(lam);
  if (g.degree() != lam.d) throw Error(Errc::kDomainMismatch, "conjugator degree differs from d");
  SdLabeling out{lam.n, lam.d, {}};
  const Permutation gi = g.inverse();
  for (const auto& p : lam.assign) out.assign.push_back(gi * p * g);
  return out;
}

}  // namespace hallmatch
