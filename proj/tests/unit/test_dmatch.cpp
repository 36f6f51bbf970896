#include <map>
#include <numeric>

#include "doctest.h"
#include "error_code.hpp"
#include "oracles.hpp"

#include "hallmatch/dmatch.hpp"
#include "hallmatch/matching.hpp"

using namespace hallmatch;

TEST_CASE("cycle_type_of") {
  CHECK(cycle_type_of(Permutation(4)).lengths == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(cycle_type_of(Permutation::from_cycles(3, {{0, 1, 2}})).lengths == std::vector<std::size_t>{3});
  const auto t = cycle_type_of(Permutation::from_cycles(5, {{0, 1}, {2, 3, 4}}));
  CHECK(t.d == 5);
  CHECK(t.lengths == std::vector<std::size_t>{3, 2});
  CHECK(cycle_type_of(Permutation(0)).lengths.empty());
}

TEST_CASE("partitions") {
  const auto p3 = partitions(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0].lengths == std::vector<std::size_t>{3});
  CHECK(p3[1].lengths == std::vector<std::size_t>{2, 1});
  CHECK(p3[2].lengths == std::vector<std::size_t>{1, 1, 1});
  CHECK(partitions(1).size() == 1);
  REQUIRE(partitions(0).size() == 1);
  CHECK(partitions(0)[0].lengths.empty());
  for (std::size_t d = 0; d <= 20; ++d) {
    CAPTURE(d);
    const auto all = partitions(d);
    CHECK(all.size() == oracle::partition_count(d));
    for (const auto& t : all) {
      CHECK(t.d == d);
      CHECK(std::accumulate(t.lengths.begin(), t.lengths.end(), std::size_t{0}) == d);
      CHECK(std::is_sorted(t.lengths.rbegin(), t.lengths.rend()));
    }
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].lengths > all[i].lengths);
  }
  CHECK(partitions(7).size() == 15);
}

TEST_CASE("perms_with_type against enumeration") {
  CHECK(perms_with_type({3, {1, 1, 1}}) == 1);
  CHECK(perms_with_type({3, {3}}) == 2);
  CHECK(perms_with_type({3, {2, 1}}) == 3);
  for (std::size_t d = 1; d <= 7; ++d) {
    std::map<std::vector<std::size_t>, long> counted;
    for (const auto& p : all_permutations(d)) ++counted[oracle::cycle_lengths(p)];
    for (const auto& t : partitions(d)) CHECK(perms_with_type(t) == counted[t.lengths]);
  }
  for (std::size_t d = 1; d <= 10; ++d) {
    BigInt sum = 0;
    for (const auto& t : partitions(d)) sum += perms_with_type(t);
    CHECK(sum == factorial(static_cast<unsigned>(d)));
  }
}

TEST_CASE("cover_polynomial") {
  CHECK(cover_polynomial(3, {2, {1, 1}}) == cycle_poly(3) * cycle_poly(3));
  CHECK(cover_polynomial(3, {2, {2}}) == cycle_poly(6));
  CHECK(cover_polynomial(2, {0, {}}) == Polynomial{1});
  CHECK(error_code([] { perms_with_type({3, {2}}); }) == Errc::kInvalidArgument);
  CHECK(error_code([] { perms_with_type({2, {2, 0}}); }) == Errc::kInvalidArgument);
}

TEST_CASE("method examples") {
  const Polynomial c22{3, 0, -4, 0, 1};
  for (auto m : all_methods()) {
    CAPTURE(method_name(m));
    CHECK(dmatch(m, 2, 2) == c22);
    for (std::size_t n = 1; n <= 5; ++n) CHECK(dmatch(m, n, 1) == cycle_poly(n));
  }
  CHECK(dmatch_bruteforce(1, 2) == Polynomial{-1, 0, 1});
  CHECK(dmatch_cycle_type(2, 3) == compose(path_poly(3), cycle_poly(2)));
  CHECK(dmatch_closed_form(3, 2) == pow(Polynomial{0, -3, 0, 1}, 2) - Polynomial{1});
  CHECK(hall_quotient(2, 2) == c22);
  CHECK(hall_quotient(3, 1) == Polynomial{0, -3, 0, 1});
  for (std::size_t d = 1; d <= 6; ++d) CHECK(hall_quotient(1, d) == path_poly(d));
  CHECK(dmatch_permutation_sum(3, 3) == dmatch_cycle_type(3, 3));
}

TEST_CASE("bruteforce agrees with a hand average of cover polynomials") {
  // (n, d) = (2, 2): two labelings give C_2 + C_2, two give C_4.
  const Polynomial two_c2 = cycle_poly(2) * cycle_poly(2);
  const Polynomial expect = scale_div(two_c2 * BigInt(2) + cycle_poly(4) * BigInt(2), 4);
  CHECK(dmatch_bruteforce(2, 2) == expect);
}

TEST_CASE("all methods agree within budget") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t d = 1; d <= 6; ++d) {
      CAPTURE(n);
      CAPTURE(d);
      const auto expect = dmatch_closed_form(n, d);
      CHECK(dmatch_cycle_type(n, d) == expect);
      CHECK(dmatch_permutation_sum(n, d) == expect);
      if (n >= 2) CHECK(hall_quotient(n, d) == expect);
      const auto count = labeling_count(n, d);
      if (count && *count <= 1'000'000) CHECK(dmatch_bruteforce(n, d, {1'000'000, 0}) == expect);
    }
  }
}

TEST_CASE("worker count does not change the result") {
  const auto one = dmatch_bruteforce(3, 3, {1'000'000, 1});
  CHECK(dmatch_bruteforce(3, 3, {1'000'000, 3}) == one);
  CHECK(dmatch_bruteforce(3, 3, {1'000'000, 0}) == one);
  CHECK(dmatch_bruteforce(2, 4, {1'000'000, 7}) == dmatch_closed_form(2, 4));
  CHECK(dmatch_permutation_sum(2, 6, {1'000'000, 4}) == dmatch_closed_form(2, 6));
}

TEST_CASE("budget and argument errors") {
  CHECK(error_code([] { dmatch_bruteforce(3, 6); }) == Errc::kBudgetExceeded);
  CHECK(error_code([] { dmatch_bruteforce(3, 3, {215, 1}); }) == Errc::kBudgetExceeded);
  CHECK(error_code([] { dmatch_bruteforce(3, 3, {216, 1}); }) == std::nullopt);
  CHECK(error_code([] { dmatch_permutation_sum(2, 8, {100, 1}); }) == Errc::kBudgetExceeded);
  CHECK(error_code([] { dmatch_closed_form(0, 2); }) == Errc::kInvalidArgument);
  CHECK(error_code([] { dmatch_cycle_type(2, 0); }) == Errc::kInvalidArgument);
  CHECK(labeling_count(3, 3) == 216u);
  CHECK_FALSE(labeling_count(30, 10).has_value());
}

TEST_CASE("method names") {
  for (auto m : all_methods()) CHECK(parse_method(method_name(m)) == m);
  CHECK(parse_method("closed-form") == DmatchMethod::kClosedForm);
  CHECK_FALSE(parse_method("nope").has_value());
  CHECK(all_methods().size() == 5);
}

TEST_CASE("real roots of the d-matching polynomials") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t d = 1; d <= 5; ++d) {
      const auto sf = square_free_part(dmatch_closed_form(n, d));
      CHECK(sturm_real_root_count(sf) == *sf.degree());
    }
  }
}
