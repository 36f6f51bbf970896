#include "hallmatch/bijections.hpp"

#include <algorithm>
#include <numeric>

#include "hallmatch/errors.hpp"
#include "hallmatch/matching.hpp"

namespace hallmatch {

namespace {

bool has(std::uint32_t mask, std::size_t i) { return (mask >> i) & 1; }

// The rebuilding step shared by both inverses: walk the non-targets in the
// order given by `order`, emitting each one and, when it is a source, its
// target right after it.
PathDiagram walk(std::size_t d, const std::vector<std::size_t>& order, const std::vector<std::size_t>& target_of) {
  std::vector<std::size_t> bottom;
  std::uint32_t matching = 0;
  for (std::size_t v : order) {
    bottom.push_back(v);
    if (target_of[v] != d) {
      matching |= std::uint32_t{1} << (bottom.size() - 1);
      bottom.push_back(target_of[v]);
    }
  }
  return PathDiagram{Permutation::from_images(std::span<const std::size_t>(bottom)), matching};
}

// x -> sigma(tau(x)).
Permutation after_swap(const Permutation& sigma, const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
  return pair_swap(sigma.degree(), arcs) * sigma;
}

void require_functional(const FunctionalMatching& fm) {
  if (!is_functional_matching(fm.sigma, fm.sources)) throw Error(Errc::kNotAMatching, "not a matching of G_sigma");
}

void require_directed(const DirectedKMatching& dm) {
  if (!is_directed_matching(dm)) throw Error(Errc::kNotAMatching, "not a directed matching with a free permutation");
}

}  // namespace

SymmetricGraph functional_graph(const Permutation& sigma) {
  std::vector<UndirectedEdge> edges;
  for (std::size_t s = 0; s < sigma.degree(); ++s) edges.emplace_back(s, sigma(s));
  return SymmetricGraph::from_undirected(sigma.degree(), edges);
}

BigInt functional_graph_matchings(const Permutation& sigma, std::size_t m) {
  return count_matchings(functional_graph(sigma), m);
}

bool is_path_matching(std::uint32_t mask, std::size_t d) {
  if (d == 0) return mask == 0;
  if (d < 32 && (mask >> (d - 1)) != 0) return false;
  return (mask & (mask >> 1)) == 0;
}

bool is_functional_matching(const Permutation& sigma, std::uint32_t sources) {
  const std::size_t d = sigma.degree();
  if (d < 32 && (sources >> d) != 0) return false;
  std::vector<char> used(d, 0);
  for (std::size_t s = 0; s < d; ++s) {
    if (!has(sources, s)) continue;
    const std::size_t t = sigma(s);
    if (t == s || used[s] || used[t]) return false;
    used[s] = used[t] = 1;
  }
  return true;
}

bool is_directed_matching(const DirectedKMatching& dm) {
  if (dm.free_perm.degree() != dm.d) return false;
  std::vector<char> used(dm.d, 0);
  std::size_t last_source = 0;
  for (std::size_t i = 0; i < dm.arcs.size(); ++i) {
    const auto [s, t] = dm.arcs[i];
    if (s >= dm.d || t >= dm.d || s == t || used[s] || used[t]) return false;
    if (i > 0 && s < last_source) return false;
    last_source = s;
    used[s] = used[t] = 1;
    if (dm.free_perm(t) != t) return false;
  }
  return true;
}

std::vector<std::size_t> left_ends(const PathDiagram& diag) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < diag.d(); ++p) {
    if (p == 0 || !has(diag.matching, p - 1)) out.push_back(diag.perm(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> top_row(const PathDiagram& diag) {
  const auto labels = left_ends(diag);
  std::vector<std::size_t> top(diag.d());
  std::size_t next = 0;
  for (std::size_t p = 0; p < diag.d(); ++p) {
    top[p] = (p == 0 || !has(diag.matching, p - 1)) ? labels[next++] : diag.perm(p);
  }
  return top;
}

Permutation pair_swap(std::size_t d, const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
  std::vector<std::size_t> images(d);
  std::iota(images.begin(), images.end(), std::size_t{0});
  for (const auto& [s, t] : arcs) std::swap(images[s], images[t]);
  return Permutation::from_images(std::span<const std::size_t>(images));
}

std::vector<std::pair<std::size_t, std::size_t>> arcs_of(const FunctionalMatching& fm) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t s = 0; s < fm.sigma.degree(); ++s) {
    if (has(fm.sources, s)) out.emplace_back(s, fm.sigma(s));
  }
  return out;
}

FunctionalMatching bij_gp_forward(const PathDiagram& diag) {
  const std::size_t d = diag.d();
  if (!is_path_matching(diag.matching, d)) throw Error(Errc::kNotAMatching, "not a matching of the path");
  const auto top = top_row(diag);
  std::vector<std::size_t> prime(d);
  for (std::size_t p = 0; p < d; ++p) prime[top[p]] = diag.perm(p);
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  std::uint32_t sources = 0;
  for (std::size_t p = 0; p + 1 < d; ++p) {
    if (!has(diag.matching, p)) continue;
    arcs.emplace_back(diag.perm(p), diag.perm(p + 1));
    sources |= std::uint32_t{1} << diag.perm(p);
  }
  const Permutation sigma = pair_swap(d, arcs) * Permutation::from_images(std::span<const std::size_t>(prime));
  return FunctionalMatching{sigma, sources};
}

PathDiagram bij_gp_inverse(const FunctionalMatching& fm) {
  require_functional(fm);
  const std::size_t d = fm.sigma.degree();
  const auto arcs = arcs_of(fm);
  const Permutation prime = after_swap(fm.sigma, arcs);
  std::vector<std::size_t> target_of(d, d);
  std::vector<char> is_target(d, 0);
  for (const auto& [s, t] : arcs) {
    target_of[s] = t;
    is_target[t] = 1;
  }
  std::vector<std::size_t> order;
  for (std::size_t x = 0; x < d; ++x) {
    if (!is_target[x]) order.push_back(prime(x));
  }
  return walk(d, order, target_of);
}

DirectedKMatching bij_kp_forward(const PathDiagram& diag) {
  const std::size_t d = diag.d();
  if (!is_path_matching(diag.matching, d)) throw Error(Errc::kNotAMatching, "not a matching of the path");
  const auto top = top_row(diag);
  DirectedKMatching out{d, {}, Permutation(d)};
  std::vector<std::size_t> images(d);
  std::iota(images.begin(), images.end(), std::size_t{0});
  for (std::size_t p = 0; p < d; ++p) {
    const bool right_end = p > 0 && has(diag.matching, p - 1);
    if (!right_end) images[diag.perm(p)] = top[p];
    if (p + 1 < d && has(diag.matching, p)) out.arcs.emplace_back(diag.perm(p), diag.perm(p + 1));
  }
  std::sort(out.arcs.begin(), out.arcs.end());
  out.free_perm = Permutation::from_images(std::span<const std::size_t>(images));
  return out;
}

PathDiagram bij_kp_inverse(const DirectedKMatching& dm) {
  require_directed(dm);
  const std::size_t d = dm.d;
  std::vector<std::size_t> target_of(d, d);
  std::vector<char> is_target(d, 0);
  for (const auto& [s, t] : dm.arcs) {
    target_of[s] = t;
    is_target[t] = 1;
  }
  // Non-targets ordered by their upper label.
  std::vector<std::size_t> by_label(d, d);
  for (std::size_t v = 0; v < d; ++v) {
    if (!is_target[v]) by_label[dm.free_perm(v)] = v;
  }
  std::vector<std::size_t> order;
  for (std::size_t label = 0; label < d; ++label) {
    if (by_label[label] != d) order.push_back(by_label[label]);
  }
  return walk(d, order, target_of);
}

FunctionalMatching bij_gk_forward(const DirectedKMatching& dm) {
  require_directed(dm);
  std::uint32_t sources = 0;
  for (const auto& [s, t] : dm.arcs) sources |= std::uint32_t{1} << s;
  return FunctionalMatching{pair_swap(dm.d, dm.arcs) * dm.free_perm, sources};
}

DirectedKMatching bij_gk_inverse(const FunctionalMatching& fm) {
  require_functional(fm);
  const auto arcs = arcs_of(fm);
  return DirectedKMatching{fm.sigma.degree(), arcs, after_swap(fm.sigma, arcs)};
}

std::vector<PathDiagram> all_path_diagrams(std::size_t d) {
  std::vector<std::uint32_t> masks;
  const std::uint32_t limit = d == 0 ? 1 : std::uint32_t{1} << (d - 1);
  for (std::uint32_t m = 0; m < limit; ++m) {
    if (is_path_matching(m, d)) masks.push_back(m);
  }
  std::vector<PathDiagram> out;
  for (const auto& p : all_permutations(d)) {
    for (std::uint32_t m : masks) out.push_back({p, m});
  }
  return out;
}

std::vector<FunctionalMatching> all_functional_matchings(std::size_t d) {
  std::vector<FunctionalMatching> out;
  for (const auto& sigma : all_permutations(d)) {
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << d); ++s) {
      if (is_functional_matching(sigma, s)) out.push_back({sigma, s});
    }
  }
  return out;
}

namespace {

void grow_arcs(std::size_t d, std::size_t from, std::vector<char>& used,
               std::vector<std::pair<std::size_t, std::size_t>>& arcs,
               std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& out) {
  out.push_back(arcs);
  for (std::size_t a = from; a < d; ++a) {
    if (used[a]) continue;
    for (std::size_t b = a + 1; b < d; ++b) {
      if (used[b]) continue;
      used[a] = used[b] = 1;
      arcs.emplace_back(a, b);
      grow_arcs(d, a + 1, used, arcs, out);
      arcs.back() = {b, a};
      grow_arcs(d, a + 1, used, arcs, out);
      arcs.pop_back();
      used[a] = used[b] = 0;
    }
  }
}

}  // namespace

std::vector<DirectedKMatching> all_directed_matchings(std::size_t d) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> arc_sets;
  std::vector<char> used(d, 0);
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  grow_arcs(d, 0, used, arcs, arc_sets);

  std::vector<DirectedKMatching> out;
  for (auto& set : arc_sets) {
    std::sort(set.begin(), set.end());
    std::vector<char> is_target(d, 0);
    for (const auto& [s, t] : set) is_target[t] = 1;
    std::vector<std::size_t> free;
    for (std::size_t v = 0; v < d; ++v) {
      if (!is_target[v]) free.push_back(v);
    }
    std::vector<std::size_t> shuffled = free;
    do {
      std::vector<std::size_t> images(d);
      std::iota(images.begin(), images.end(), std::size_t{0});
      for (std::size_t i = 0; i < free.size(); ++i) images[free[i]] = shuffled[i];
      out.push_back({d, set, Permutation::from_images(std::span<const std::size_t>(images))});
    } while (std::next_permutation(shuffled.begin(), shuffled.end()));
  }
  return out;
}

}  // namespace hallmatch
