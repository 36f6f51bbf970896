#include "hallmatch/dmatch.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <thread>

#include "hallmatch/cover.hpp"
#include "hallmatch/errors.hpp"
#include "hallmatch/matching.hpp"

namespace hallmatch {

namespace {

void check_shape(std::size_t n, std::size_t d) {
  if (n == 0 || d == 0) throw Error(Errc::kInvalidArgument, "n and d must be positive");
}

std::optional<std::uint64_t> factorial_u64(std::size_t d) {
  std::uint64_t acc = 1;
  for (std::size_t i = 2; i <= d; ++i) {
    if (__builtin_mul_overflow(acc, static_cast<std::uint64_t>(i), &acc)) return std::nullopt;
  }
  return acc;
}

unsigned resolve_jobs(unsigned jobs, std::uint64_t work) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(work, 1)));
}

// Sum of term(i) for i in [0, count), split into contiguous chunks. The
// partial sums are added in chunk order, though any order gives the same
// polynomial.
Polynomial parallel_sum(std::uint64_t count, unsigned jobs, const std::function<Polynomial(std::uint64_t)>& term) {
  jobs = resolve_jobs(jobs, count);
  std::vector<Polynomial> partial(jobs);
  auto work = [&](unsigned w) {
    const std::uint64_t lo = count * w / jobs;
    const std::uint64_t hi = count * (w + 1) / jobs;
    Polynomial acc;
    for (std::uint64_t i = lo; i < hi; ++i) acc += term(i);
    partial[w] = std::move(acc);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  Polynomial total;
  for (const auto& p : partial) total += p;
  return total;
}

void build_partitions(std::size_t remaining, std::size_t max_part, std::vector<std::size_t>& prefix,
                      std::size_t d, std::vector<CycleType>& out) {
  if (remaining == 0) {
    out.push_back({d, prefix});
    return;
  }
  for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    build_partitions(remaining - part, part, prefix, d, out);
    prefix.pop_back();
  }
}

}  // namespace

CycleType cycle_type_of(const Permutation& p) {
  CycleType t{p.degree(), {}};
  for (const auto& c : p.cycles()) t.lengths.push_back(c.size());
  std::sort(t.lengths.begin(), t.lengths.end(), std::greater<>());
  return t;
}

std::vector<CycleType> partitions(std::size_t d) {
  std::vector<CycleType> out;
  std::vector<std::size_t> prefix;
  build_partitions(d, d, prefix, d, out);
  return out;
}

BigInt perms_with_type(const CycleType& t) {
  std::map<std::size_t, unsigned> mult;
  std::size_t sum = 0;
  for (std::size_t l : t.lengths) {
    if (l == 0) throw Error(Errc::kInvalidArgument, "cycle lengths must be positive");
    ++mult[l];
    sum += l;
  }
  if (sum != t.d) throw Error(Errc::kInvalidArgument, "cycle lengths do not sum to d");
  BigInt denom = 1;
  for (const auto& [len, m] : mult) denom *= power(static_cast<unsigned long>(len), m) * factorial(m);
  return factorial(static_cast<unsigned>(t.d)) / denom;
}

Polynomial cover_polynomial(std::size_t n, const CycleType& t) {
  Polynomial acc{1};
  for (std::size_t l : t.lengths) acc *= cycle_poly(n * l);
  return acc;
}

std::optional<std::uint64_t> labeling_count(std::size_t n, std::size_t d) {
  const auto f = factorial_u64(d);
  if (!f) return std::nullopt;
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (__builtin_mul_overflow(acc, *f, &acc)) return std::nullopt;
  }
  return acc;
}

Polynomial dmatch_bruteforce(std::size_t n, std::size_t d, const EnumerationConfig& cfg) {
  check_shape(n, d);
  const auto total = labeling_count(n, d);
  if (!total || *total > cfg.budget) {
    throw Error(Errc::kBudgetExceeded, "(d!)^n labelings exceed the budget of " + std::to_string(cfg.budget));
  }
  const auto perms = all_permutations(d);
  const std::uint64_t radix = perms.size();
  const Polynomial sum = parallel_sum(*total, cfg.jobs, [&](std::uint64_t index) {
    SdLabeling lam{n, d, {}};
    lam.assign.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      lam.assign.push_back(perms[index % radix]);
      index /= radix;
    }
    return matching_polynomial(build_cover(n, lam).graph);
  });
  return scale_div(sum, BigInt(static_cast<unsigned long>(*total)));
}

Polynomial dmatch_permutation_sum(std::size_t n, std::size_t d, const EnumerationConfig& cfg) {
  check_shape(n, d);
  const auto total = factorial_u64(d);
  if (!total || *total > cfg.budget) {
    throw Error(Errc::kBudgetExceeded, "d! permutations exceed the budget of " + std::to_string(cfg.budget));
  }
  const auto perms = all_permutations(d);
  const Polynomial sum = parallel_sum(*total, cfg.jobs, [&](std::uint64_t index) {
    return cover_polynomial(n, cycle_type_of(perms[index]));
  });
  return scale_div(sum, factorial(static_cast<unsigned>(d)));
}

Polynomial dmatch_cycle_type(std::size_t n, std::size_t d) {
  check_shape(n, d);
  Polynomial sum;
  for (const auto& t : partitions(d)) sum += cover_polynomial(n, t) * perms_with_type(t);
  return scale_div(sum, factorial(static_cast<unsigned>(d)));
}

Polynomial dmatch_closed_form(std::size_t n, std::size_t d) {
  check_shape(n, d);
  return compose(path_poly(d), cycle_poly(n));
}

Polynomial hall_quotient(std::size_t n, std::size_t d) {
  check_shape(n, d);
  return div_exact(path_poly(n * d + n - 1), path_poly(n - 1));
}

std::string_view method_name(DmatchMethod m) noexcept {
  switch (m) {
    case DmatchMethod::kLabelings: return "labelings";
    case DmatchMethod::kPermutations: return "permutations";
    case DmatchMethod::kCycleTypes: return "cycle-types";
    case DmatchMethod::kClosedForm: return "closed-form";
    case DmatchMethod::kHallQuotient: return "hall-quotient";
  }
  return "?";
}

const std::vector<DmatchMethod>& all_methods() {
  static const std::vector<DmatchMethod> kAll{DmatchMethod::kLabelings, DmatchMethod::kPermutations,
                                              DmatchMethod::kCycleTypes, DmatchMethod::kClosedForm,
                                              DmatchMethod::kHallQuotient};
  return kAll;
}

std::optional<DmatchMethod> parse_method(std::string_view name) noexcept {
  for (DmatchMethod m : all_methods()) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

Polynomial dmatch(DmatchMethod method, std::size_t n, std::size_t d, const EnumerationConfig& cfg) {
  switch (method) {
    case DmatchMethod::kLabelings: return dmatch_bruteforce(n, d, cfg);
    case DmatchMethod::kPermutations: return dmatch_permutation_sum(n, d, cfg);
    case DmatchMethod::kCycleTypes: return dmatch_cycle_type(n, d);
    case DmatchMethod::kClosedForm: return dmatch_closed_form(n, d);
    case DmatchMethod::kHallQuotient: return hall_quotient(n, d);
  }
  throw std::logic_error("unknown dmatch method");
}

}  // namespace hallmatch
