// Acceptance checks for the library. Prints one PASS/FAIL line per criterion
// with its wall time and exits nonzero if any criterion fails. All
// comparisons are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"

#include "hallmatch/bijections.hpp"
#include "hallmatch/corpus.hpp"
#include "hallmatch/dmatch.hpp"
#include "hallmatch/errors.hpp"
#include "hallmatch/matching.hpp"
#include "hallmatch/metacycle.hpp"
#include "hallmatch/poly.hpp"

using namespace hallmatch;

namespace {

// Collects the first failure; later ones only bump the count.
struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

std::string label(std::initializer_list<std::pair<const char*, std::size_t>> parts) {
  std::ostringstream s;
  bool first = true;
  for (const auto& [name, value] : parts) {
    s << (first ? "" : " ") << name << "=" << value;
    first = false;
  }
  return s.str();
}

void composition(Outcome& o) {
  for (std::size_t k = 1; k <= 16; ++k) {
    for (std::size_t n = 1; k * n <= 16; ++n) {
      o.check(compose(cycle_poly(k), cycle_poly(n)) == cycle_poly(k * n), label({{"k", k}, {"n", n}}));
    }
  }
}

void main_theorem(Outcome& o) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t d = 1; d <= 6; ++d) {
      o.check(dmatch_cycle_type(n, d) == dmatch_closed_form(n, d), label({{"n", n}, {"d", d}}));
    }
  }
}

void hall(Outcome& o) {
  for (std::size_t n = 2; n <= 8; ++n) {
    for (std::size_t d = 1; d <= 6; ++d) {
      bool ok = false;
      try {
        ok = hall_quotient(n, d) == dmatch_closed_form(n, d);
      } catch (const Error&) {
        ok = false;
      }
      o.check(ok, label({{"n", n}, {"d", d}}));
    }
  }
}

void ground_truth(Outcome& o) {
  const std::pair<std::size_t, std::size_t> pairs[] = {{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}};
  for (const auto& [n, d] : pairs) {
    o.check(dmatch_bruteforce(n, d) == dmatch_cycle_type(n, d), label({{"n", n}, {"d", d}}));
  }
}

void divisibility(Outcome& o) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t d = 1; d <= 5; ++d) {
      o.check(mul(compose(path_poly(d), cycle_poly(n)), path_poly(n - 1)) == path_poly(d * n + n - 1),
              label({{"n", n}, {"d", d}}));
    }
  }
}

void chebyshev(Outcome& o) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto un = static_cast<unsigned>(n);
    o.check(dilate(cycle_poly(n), 2) == chebyshev_T(un) * BigInt(2), label({{"T n", n}}));
    o.check(dilate(path_poly(n), 2) == chebyshev_U(un), label({{"U n", n}}));
  }
}

void signed_metacycle(Outcome& o) {
  const std::pair<std::size_t, std::size_t> pairs[] = {{3, 3}, {3, 4}, {4, 3}, {5, 3}, {3, 5}};
  for (const auto& [k, n] : pairs) {
    const auto c = cycle_graph(k * n);
    for (std::size_t m = 0; m <= k * n / 2; ++m) {
      o.check(signed_count(k, n, m) == count_matchings(c, m), label({{"k", k}, {"n", n}, {"m", m}}));
    }
  }
}

using Key = std::pair<std::uint64_t, std::vector<std::int64_t>>;

Key key_of(const MetacycleMatching& m) {
  std::vector<std::int64_t> inner;
  for (const auto& x : m.inner) inner.push_back(x ? static_cast<std::int64_t>(*x) : -1);
  return {m.outer, inner};
}

void involution(Outcome& o) {
  const std::pair<std::size_t, std::size_t> pairs[] = {{3, 4}, {4, 4}, {3, 3}, {4, 3}, {3, 5}, {4, 5}};
  for (const auto& [k, n] : pairs) {
    const auto where = label({{"k", k}, {"n", n}});
    std::set<Key> image;
    bool injective = true;
    bool weights = true;
    for (std::uint64_t mask : cycle_matching_masks(k * n)) {
      const auto m = project_matching(k, n, mask);
      injective = injective && image.insert(key_of(m)).second;
      weights = weights && weight(m) == static_cast<std::size_t>(__builtin_popcountll(mask));
    }
    o.check(injective, where + " projection injective");
    o.check(weights, where + " projection keeps weight");

    std::size_t bad = 0;
    bool complement = true;
    bool f_ok = true;
    for (const auto& m : enumerate_metacycle(k, n)) {
      const bool is_bad = classify_bad(m);
      complement = complement && (is_bad != (image.count(key_of(m)) > 0));
      if (!is_bad) continue;
      ++bad;
      const auto f = involution_f(m);
      f_ok = f_ok && classify_bad(f) && key_of(f) != key_of(m) && key_of(involution_f(f)) == key_of(m) &&
             weight(f) == weight(m) && sign(f) == -sign(m);
    }
    o.check(complement, where + " image is the complement of the bad set");
    o.check(f_ok, where + " f is a sign-reversing weight-preserving fixed-point-free involution");
    if (n % 2 == 1) o.check(bad == 0, where + " bad set empty");
    if (n % 2 == 0) o.check(bad > 0, where + " bad set nonempty");
    o.check(audit_metacycle(k, n).ok(), where + " library audit");
  }
}

void bijection_suite(Outcome& o) {
  for (std::size_t d = 0; d <= 5; ++d) {
    const auto where = label({{"d", d}});
    bool trips = true;
    for (const auto& x : all_path_diagrams(d)) {
      trips = trips && bij_gp_inverse(bij_gp_forward(x)) == x && bij_kp_inverse(bij_kp_forward(x)) == x;
    }
    for (const auto& y : all_functional_matchings(d)) {
      trips = trips && bij_gp_forward(bij_gp_inverse(y)) == y && bij_gk_forward(bij_gk_inverse(y)) == y;
    }
    for (const auto& z : all_directed_matchings(d)) {
      trips = trips && bij_kp_forward(bij_kp_inverse(z)) == z && bij_gk_inverse(bij_gk_forward(z)) == z;
    }
    o.check(trips, where + " round trips");
  }
  for (std::size_t d = 1; d <= 7; ++d) {
    std::vector<BigInt> sum(d / 2 + 1, 0);
    for (const auto& sigma : all_permutations(d)) {
      for (std::size_t m = 0; m <= d / 2; ++m) sum[m] += functional_graph_matchings(sigma, m);
    }
    for (std::size_t m = 0; m <= d / 2; ++m) {
      const BigInt lhs = factorial(static_cast<unsigned>(d)) * oracle::path_matchings(d, m);
      o.check(lhs == sum[m], label({{"d", d}, {"m", m}}) + " path vs functional");
      o.check(power(2, static_cast<unsigned>(m)) * factorial(static_cast<unsigned>(d - m)) * complete_graph_matchings(d, m) == lhs,
              label({{"d", d}, {"m", m}}) + " complete vs path");
    }
  }
  const PathDiagram example{Permutation::from_images({0, 2, 5, 3, 1, 4}), 0b101};
  const std::vector<std::pair<std::size_t, std::size_t>> arcs{{0, 2}, {5, 3}};
  o.check(left_ends(example) == std::vector<std::size_t>{0, 1, 4, 5}, "worked example left ends");
  const auto fm = bij_gp_forward(example);
  o.check(arcs_of(fm) == arcs && bij_gp_inverse(fm) == example, "worked example through G_sigma");
  const auto dm = bij_kp_forward(example);
  o.check(dm.arcs == arcs && bij_kp_inverse(dm) == example, "worked example through K_d");
}

bool real_rooted(const Polynomial& p) {
  const auto sf = square_free_part(p);
  return sturm_real_root_count(sf) == *sf.degree();
}

void real_roots(Outcome& o) {
  for (const auto& entry : small_graph_corpus()) {
    if (!entry.loopless || entry.graph.num_vertices() > 8) continue;
    o.check(real_rooted(matching_polynomial(entry.graph)), entry.name);
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t d = 1; d <= 5; ++d) o.check(real_rooted(dmatch_closed_form(n, d)), label({{"n", n}, {"d", d}}));
  }
}

void oracle_equivalence(Outcome& o) {
  for (const auto& entry : small_graph_corpus()) {
    o.check(matching_polynomial(entry.graph) == matching_polynomial_recursive(entry.graph), entry.name);
  }
  for (std::size_t n = 0; n <= 12; ++n) {
    o.check(path_poly(n) == oracle::brute_matching_polynomial(path_graph(n)), label({{"P n", n}}));
    if (n >= 1) o.check(cycle_poly(n) == oracle::brute_matching_polynomial(cycle_graph(n)), label({{"C n", n}}));
  }
}

struct Criterion {
  const char* name;
  double target_seconds;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"composition C_kn = C_k(C_n), kn <= 16", 1, composition},
      {"main theorem, n <= 8, d <= 6", 5, main_theorem},
      {"Hall quotient, 2 <= n <= 8, d <= 6", 1, hall},
      {"labeling average ground truth", 60, ground_truth},
      {"divisibility P_(dn+n-1) = P_d(C_n) P_(n-1)", 1, divisibility},
      {"Chebyshev bridge, 1 <= n <= 12", 1, chebyshev},
      {"metacycle signed counts", 120, signed_metacycle},
      {"involution and projection audit", 120, involution},
      {"bijection suite", 30, bijection_suite},
      {"real-rootedness spot check", 10, real_roots},
      {"oracle equivalence", 10, oracle_equivalence},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.failures == 0;
    failed += !pass;
    std::printf("%s [%2d] %-46s %5zu cases  %8.3f s (target %g s)%s\n", pass ? "PASS" : "FAIL", index, c.name, o.cases,
                secs, c.target_seconds, secs > c.target_seconds ? "  over time target" : "");
    if (!pass) std::printf("       %zu failing, first: %s\n", o.failures, o.first.c_str());
  }
  std::printf("%d of %d criteria pass\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
