#include <map>
#include <set>

#include "doctest.h"
#include "error_code.hpp"
#include "oracles.hpp"

#include "hallmatch/bijections.hpp"
#include "hallmatch/matching.hpp"

using namespace hallmatch;

namespace {

std::size_t popcount(std::uint32_t x) { return static_cast<std::size_t>(__builtin_popcount(x)); }

PathDiagram worked_example() {
  return PathDiagram{Permutation::from_images({0, 2, 5, 3, 1, 4}), 0b101};
}

}  // namespace

TEST_CASE("functional graph matchings") {
  CHECK(functional_graph_matchings(Permutation(3), 1) == 0);
  CHECK(functional_graph_matchings(Permutation::from_cycles(3, {{0, 1, 2}}), 1) == 3);
  BigInt sum = 0;
  for (const auto& s : all_permutations(3)) sum += functional_graph_matchings(s, 1);
  CHECK(sum == 12);
  // A 2-cycle gives two parallel arcs, never both in one matching.
  const auto t = Permutation::from_cycles(2, {{0, 1}});
  CHECK(functional_graph_matchings(t, 1) == 2);
  CHECK(functional_graph_matchings(t, 2) == 0);
  CHECK(functional_graph(t).geometric_edges().size() == 2);
}

TEST_CASE("validity predicates") {
  CHECK(is_path_matching(0, 0));
  CHECK_FALSE(is_path_matching(1, 0));
  CHECK(is_path_matching(0b101, 6));
  CHECK_FALSE(is_path_matching(0b110, 6));
  CHECK_FALSE(is_path_matching(0b100000, 6));  // edge 5-6 lies outside P_6
  const auto s = Permutation::from_cycles(4, {{0, 1}, {2, 3}});
  CHECK(is_functional_matching(s, 0b0101));
  CHECK_FALSE(is_functional_matching(s, 0b0011));
  CHECK_FALSE(is_functional_matching(Permutation(3), 0b1));
  CHECK_FALSE(is_functional_matching(s, 0b10000));
  DirectedKMatching dm{3, {{0, 2}}, Permutation(3)};
  CHECK(is_directed_matching(dm));
  dm.free_perm = Permutation::from_cycles(3, {{1, 2}});
  CHECK_FALSE(is_directed_matching(dm));
  DirectedKMatching unsorted{4, {{2, 3}, {0, 1}}, Permutation(4)};
  CHECK_FALSE(is_directed_matching(unsorted));
  DirectedKMatching overlap{4, {{0, 1}, {1, 2}}, Permutation(4)};
  CHECK_FALSE(is_directed_matching(overlap));
}

TEST_CASE("tau_M") {
  std::mt19937_64 rng(1);
  for (const auto& fm : all_functional_matchings(5)) {
    const auto arcs = arcs_of(fm);
    const auto tau = pair_swap(5, arcs);
    CHECK((tau * tau).is_identity());
    const auto sigma_prime = tau * fm.sigma;
    CHECK(tau * sigma_prime == fm.sigma);
    for (const auto& [s, t] : arcs) CHECK(fm.sigma(s) == t);
  }
}

TEST_CASE("worked example") {
  const auto diag = worked_example();
  CHECK(left_ends(diag) == std::vector<std::size_t>{0, 1, 4, 5});
  CHECK(top_row(diag) == std::vector<std::size_t>{0, 2, 1, 3, 4, 5});

  const auto fm = bij_gp_forward(diag);
  CHECK(arcs_of(fm) == std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {5, 3}});
  CHECK(fm.sigma.to_cycle_string() == "(1 3)(2 6 4 5)");
  CHECK(bij_gp_inverse(fm) == diag);

  const auto dm = bij_kp_forward(diag);
  CHECK(dm.arcs == std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {5, 3}});
  // Vertex -> label: 0;0, 1;4, 4;5, 5;1.
  CHECK(dm.free_perm(0) == 0);
  CHECK(dm.free_perm(1) == 4);
  CHECK(dm.free_perm(4) == 5);
  CHECK(dm.free_perm(5) == 1);
  CHECK(dm.free_perm(2) == 2);
  CHECK(dm.free_perm(3) == 3);
  CHECK(bij_kp_inverse(dm) == diag);

  const auto via_k = bij_gk_forward(dm);
  CHECK(arcs_of(via_k) == arcs_of(fm));
  CHECK(bij_gk_inverse(via_k) == dm);
}

TEST_CASE("degenerate inputs") {
  const auto pi = Permutation::from_cycles(4, {{0, 3, 1}});
  const PathDiagram plain{pi, 0};
  const auto fm = bij_gp_forward(plain);
  CHECK(fm.sigma == pi);
  CHECK(fm.sources == 0);
  CHECK(bij_gp_inverse({pi, 0}) == plain);
  const auto dm = bij_kp_forward(plain);
  CHECK(dm.arcs.empty());
  CHECK(dm.free_perm == pi.inverse());
  CHECK(bij_kp_inverse({4, {}, Permutation(4)}) == PathDiagram{Permutation(4), 0});
  CHECK(bij_gk_forward({4, {}, pi}) == FunctionalMatching{pi, 0});
  CHECK(bij_gk_inverse({pi, 0}) == DirectedKMatching{4, {}, pi});
  CHECK(bij_gp_forward({Permutation(0), 0}).sigma.degree() == 0);
  CHECK(all_path_diagrams(0).size() == 1);
}

TEST_CASE("error paths") {
  CHECK(error_code([] { bij_gp_forward({Permutation(4), 0b11}); }) == Errc::kNotAMatching);
  CHECK(error_code([] { bij_kp_forward({Permutation(4), 0b1000}); }) == Errc::kNotAMatching);
  CHECK(error_code([] { bij_gp_inverse({Permutation(3), 0b1}); }) == Errc::kNotAMatching);
  CHECK(error_code([] { bij_gk_inverse({Permutation(3), 0b1}); }) == Errc::kNotAMatching);
  const DirectedKMatching moved{3, {{0, 1}}, Permutation::from_cycles(3, {{1, 2}})};
  CHECK(error_code([&] { bij_kp_inverse(moved); }) == Errc::kNotAMatching);
  CHECK(error_code([&] { bij_gk_forward(moved); }) == Errc::kNotAMatching);
}

TEST_CASE("round trips in both directions") {
  for (std::size_t d = 0; d <= 6; ++d) {
    CAPTURE(d);
    const auto diagrams = all_path_diagrams(d);
    const auto functional = all_functional_matchings(d);
    const auto directed = all_directed_matchings(d);
    CHECK(diagrams.size() == functional.size());
    CHECK(diagrams.size() == directed.size());

    std::set<std::pair<Permutation, std::uint32_t>> gp_images;
    for (const auto& diag : diagrams) {
      const auto fm = bij_gp_forward(diag);
      REQUIRE(is_functional_matching(fm.sigma, fm.sources));
      CHECK(popcount(fm.sources) == popcount(diag.matching));
      CHECK(bij_gp_inverse(fm) == diag);
      gp_images.insert({fm.sigma, fm.sources});
      const auto dm = bij_kp_forward(diag);
      REQUIRE(is_directed_matching(dm));
      CHECK(dm.arcs.size() == popcount(diag.matching));
      CHECK(bij_kp_inverse(dm) == diag);
    }
    CHECK(gp_images.size() == diagrams.size());
    for (const auto& fm : functional) {
      CHECK(bij_gp_forward(bij_gp_inverse(fm)) == fm);
      const auto dm = bij_gk_inverse(fm);
      REQUIRE(is_directed_matching(dm));
      CHECK(bij_gk_forward(dm) == fm);
    }
    for (const auto& dm : directed) {
      CHECK(bij_kp_forward(bij_kp_inverse(dm)) == dm);
      const auto fm = bij_gk_forward(dm);
      for (const auto& [s, t] : dm.arcs) CHECK(fm.sigma(s) == t);
      CHECK(bij_gk_inverse(fm) == dm);
    }
  }
}

TEST_CASE("cardinality identities") {
  for (std::size_t d = 1; d <= 7; ++d) {
    const BigInt fact = factorial(static_cast<unsigned>(d));
    std::vector<BigInt> functional_sum(d / 2 + 1, 0);
    for (const auto& sigma : all_permutations(d)) {
      const auto counts = oracle::vertex_matching_counts(functional_graph(sigma));
      for (std::size_t m = 0; m <= d / 2; ++m) {
        CHECK(functional_graph_matchings(sigma, m) == counts[m]);
        functional_sum[m] += counts[m];
      }
    }
    for (std::size_t m = 0; m <= d / 2; ++m) {
      CAPTURE(d);
      CAPTURE(m);
      const BigInt lhs = fact * oracle::path_matchings(d, m);
      CHECK(lhs == functional_sum[m]);
      CHECK(power(2, static_cast<unsigned>(m)) * factorial(static_cast<unsigned>(d - m)) * complete_graph_matchings(d, m) == lhs);
    }
  }
  // The enumerators split by size the same way.
  for (std::size_t d = 1; d <= 6; ++d) {
    std::map<std::size_t, std::size_t> by_p, by_g, by_k;
    for (const auto& x : all_path_diagrams(d)) ++by_p[popcount(x.matching)];
    for (const auto& x : all_functional_matchings(d)) ++by_g[popcount(x.sources)];
    for (const auto& x : all_directed_matchings(d)) ++by_k[x.arcs.size()];
    CHECK(by_p == by_g);
    CHECK(by_p == by_k);
  }
}
