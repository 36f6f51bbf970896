#include "hallmatch/matching.hpp"

#include <algorithm>

#include "hallmatch/simd/kernels.hpp"

namespace hallmatch {

namespace {

std::vector<UndirectedEdge> matchable_edges(const SymmetricGraph& g) {
  std::vector<UndirectedEdge> out;
  for (const auto& ge : g.geometric_edges()) {
    const std::size_t u = g.tail(ge.representative);
    const std::size_t v = g.head(ge.representative);
    if (u != v) out.emplace_back(u, v);
  }
  return out;
}

// Adds 1 to hist[|M|] for every matching M using edges[from..].
void backtrack(std::span<const UndirectedEdge> edges, std::size_t from, std::vector<char>& used, std::size_t size,
               std::vector<std::uint64_t>& hist) {
  ++hist[size];
  for (std::size_t i = from; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    if (used[u] || used[v]) continue;
    used[u] = used[v] = 1;
    backtrack(edges, i + 1, used, size + 1, hist);
    used[u] = used[v] = 0;
  }
}

// Vertex masks of every matching of `edges`, bucketed by size.
void collect_masks(std::span<const UndirectedEdge> edges, std::size_t from, std::uint64_t mask, std::size_t size,
                   std::vector<std::vector<std::uint64_t>>& buckets) {
  buckets[size].push_back(mask);
  for (std::size_t i = from; i < edges.size(); ++i) {
    const std::uint64_t bits = (std::uint64_t{1} << edges[i].first) | (std::uint64_t{1} << edges[i].second);
    if (mask & bits) continue;
    collect_masks(edges, i + 1, mask | bits, size + 1, buckets);
  }
}

std::vector<BigInt> to_bigint(const std::vector<std::uint64_t>& hist) {
  std::vector<BigInt> out;
  out.reserve(hist.size());
  for (std::uint64_t c : hist) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

Polynomial signed_generating(const std::vector<BigInt>& counts, std::size_t nv) {
  std::vector<BigInt> coeffs(nv + 1);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    coeffs[nv - 2 * i] = (i % 2 == 0) ? counts[i] : BigInt(-counts[i]);
  }
  return Polynomial(std::move(coeffs));
}

Polynomial recurse(std::span<const UndirectedEdge> edges, std::size_t from, std::vector<char>& alive,
                   std::size_t alive_count) {
  std::size_t i = from;
  while (i < edges.size() && !(alive[edges[i].first] && alive[edges[i].second])) ++i;
  if (i == edges.size()) return Polynomial::monomial(1, alive_count);
  const auto [u, v] = edges[i];
  Polynomial without_edge = recurse(edges, i + 1, alive, alive_count);
  alive[u] = alive[v] = 0;
  Polynomial without_ends = recurse(edges, i + 1, alive, alive_count - 2);
  alive[u] = alive[v] = 1;
  return without_edge - without_ends;
}

}  // namespace

bool is_matching(const SymmetricGraph& g, std::span<const std::size_t> edges) {
  std::vector<char> used(g.num_vertices(), 0);
  std::vector<char> seen(g.num_edges(), 0);
  for (std::size_t e : edges) {
    if (e >= g.num_edges() || g.tau(e) < e || seen[e]) return false;
    seen[e] = 1;
    const std::size_t u = g.tail(e);
    const std::size_t v = g.head(e);
    if (u == v || used[u] || used[v]) return false;
    used[u] = used[v] = 1;
  }
  return true;
}

std::vector<BigInt> matching_counts_backtrack(const SymmetricGraph& g) {
  const auto edges = matchable_edges(g);
  std::vector<std::uint64_t> hist(g.num_vertices() / 2 + 1, 0);
  std::vector<char> used(g.num_vertices(), 0);
  backtrack(edges, 0, used, 0, hist);
  return to_bigint(hist);
}

std::vector<BigInt> matching_counts(const SymmetricGraph& g) {
  if (g.num_vertices() > 64) return matching_counts_backtrack(g);
  const auto edges = matchable_edges(g);
  const std::size_t max_size = g.num_vertices() / 2;
  const std::span<const UndirectedEdge> all(edges);
  const auto low = all.first(edges.size() / 2);
  const auto high = all.subspan(edges.size() / 2);

  std::vector<std::vector<std::uint64_t>> low_buckets(max_size + 1);
  std::vector<std::vector<std::uint64_t>> high_buckets(max_size + 1);
  collect_masks(low, 0, 0, 0, low_buckets);
  collect_masks(high, 0, 0, 0, high_buckets);

  std::vector<std::uint64_t> hist(max_size + 1, 0);
  for (std::size_t hs = 0; hs <= max_size; ++hs) {
    for (std::uint64_t mask : high_buckets[hs]) {
      for (std::size_t ls = 0; ls + hs <= max_size; ++ls) {
        if (low_buckets[ls].empty()) continue;
        hist[ls + hs] += simd::count_disjoint(low_buckets[ls], mask);
      }
    }
  }
  return to_bigint(hist);
}

BigInt count_matchings(const SymmetricGraph& g, std::size_t m) {
  if (2 * m > g.num_vertices()) return 0;
  const auto edges = matchable_edges(g);
  std::vector<std::uint64_t> hist(g.num_vertices() / 2 + 1, 0);
  std::vector<char> used(g.num_vertices(), 0);
  backtrack(edges, 0, used, 0, hist);
  return BigInt(static_cast<unsigned long>(hist[m]));
}

Polynomial matching_polynomial(const SymmetricGraph& g) {
  return signed_generating(matching_counts(g), g.num_vertices());
}

Polynomial matching_polynomial_recursive(const SymmetricGraph& g) {
  const auto edges = matchable_edges(g);
  std::vector<char> alive(g.num_vertices(), 1);
  return recurse(edges, 0, alive, g.num_vertices());
}

Polynomial path_poly(std::size_t n) {
  Polynomial prev{1};
  if (n == 0) return prev;
  Polynomial cur = Polynomial::x();
  for (std::size_t i = 2; i <= n; ++i) {
    Polynomial next = Polynomial::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Polynomial cycle_poly(std::size_t n) {
  if (n == 0) return Polynomial{1};
  Polynomial prev = Polynomial::x();
  if (n == 1) return prev;
  Polynomial cur{-2, 0, 1};
  for (std::size_t i = 3; i <= n; ++i) {
    Polynomial next = Polynomial::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt complete_graph_matchings(std::size_t d, std::size_t m) {
  if (2 * m > d) return 0;
  const auto du = static_cast<unsigned>(d);
  const auto mu = static_cast<unsigned>(m);
  return factorial(du) / (power(2, mu) * factorial(mu) * factorial(du - 2 * mu));
}

}  // namespace hallmatch
