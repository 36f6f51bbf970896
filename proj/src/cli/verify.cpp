#include "hallmatch/verify.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "hallmatch/bijections.hpp"
#include "hallmatch/corpus.hpp"
#include "hallmatch/dmatch.hpp"
#include "hallmatch/errors.hpp"
#include "hallmatch/matching.hpp"
#include "hallmatch/metacycle.hpp"
#include "hallmatch/poly.hpp"

namespace hallmatch {

namespace {

std::string label(std::initializer_list<std::pair<const char*, std::size_t>> parts) {
  std::string out;
  for (const auto& [name, value] : parts) {
    if (!out.empty()) out += ",";
    out += std::string(name) + "=" + std::to_string(value);
  }
  return out;
}

CaseResult compare(std::string name, const Polynomial& lhs, const Polynomial& rhs) {
  CaseResult c{std::move(name), lhs == rhs, ""};
  if (!c.pass) c.detail = "lhs " + to_string(lhs) + " != rhs " + to_string(rhs);
  return c;
}

CaseResult compare(std::string name, const BigInt& lhs, const BigInt& rhs) {
  CaseResult c{std::move(name), lhs == rhs, ""};
  if (!c.pass) c.detail = "lhs " + to_decimal(lhs) + " != rhs " + to_decimal(rhs);
  return c;
}

void require_range(bool nonempty) {
  if (!nonempty) throw Error(Errc::kInvalidArgument, "empty parameter range");
}

// Runs `body`; a library error becomes a failed case rather than an abort.
CaseResult guarded(std::string name, const std::function<CaseResult()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    return CaseResult{std::move(name), false, e.what()};
  }
}

void composition(const VerifyOptions& o, VerificationReport& r) {
  r.parameters = {{"max_kn", o.max_kn}};
  for (std::size_t k = 1; k <= o.max_kn; ++k) {
    for (std::size_t n = 1; k * n <= o.max_kn; ++n) {
      r.cases.push_back(compare(label({{"k", k}, {"n", n}}), compose(cycle_poly(k), cycle_poly(n)), cycle_poly(k * n)));
    }
  }
}

void main_theorem(const VerifyOptions& o, VerificationReport& r) {
  r.parameters = {{"min_n", o.min_n}, {"max_n", o.max_n}, {"max_d", o.max_d}};
  for (std::size_t n = o.min_n; n <= o.max_n; ++n) {
    for (std::size_t d = 1; d <= o.max_d; ++d) {
      const auto name = label({{"n", n}, {"d", d}});
      r.cases.push_back(guarded(name, [&] { return compare(name, dmatch_cycle_type(n, d), dmatch_closed_form(n, d)); }));
    }
  }
}

void hall(const VerifyOptions& o, VerificationReport& r) {
  r.parameters = {{"min_n", o.min_n}, {"max_n", o.max_n}, {"max_d", o.max_d}};
  for (std::size_t n = o.min_n; n <= o.max_n; ++n) {
    for (std::size_t d = 1; d <= o.max_d; ++d) {
      const auto name = label({{"n", n}, {"d", d}});
      r.cases.push_back(guarded(name, [&] { return compare(name, hall_quotient(n, d), dmatch_closed_form(n, d)); }));
    }
  }
}

void divisibility(const VerifyOptions& o, VerificationReport& r) {
  r.parameters = {{"min_n", o.min_n}, {"max_n", o.max_n}, {"max_d", o.max_d}};
  for (std::size_t n = o.min_n; n <= o.max_n; ++n) {
    for (std::size_t d = 1; d <= o.max_d; ++d) {
      r.cases.push_back(compare(label({{"n", n}, {"d", d}}),
                                compose(path_poly(d), cycle_poly(n)) * path_poly(n - 1), path_poly(d * n + n - 1)));
    }
  }
}

void chebyshev(const VerifyOptions& o, VerificationReport& r) {
  r.parameters = {{"min_n", o.min_n}, {"max_n", o.max_n}};
  for (std::size_t n = o.min_n; n <= o.max_n; ++n) {
    const auto un = static_cast<unsigned>(n);
    r.cases.push_back(compare("T," + label({{"n", n}}), dilate(cycle_poly(n), 2), chebyshev_T(un) * BigInt(2)));
    r.cases.push_back(compare("U," + label({{"n", n}}), dilate(path_poly(n), 2), chebyshev_U(un)));
  }
}

template <class T, class F>
std::size_t count_failures(const std::vector<T>& items, F&& ok) {
  std::size_t bad = 0;
  for (const auto& x : items) bad += ok(x) ? 0 : 1;
  return bad;
}

void bijections(const VerifyOptions& o, VerificationReport& r) {
  r.parameters = {{"max_d", o.max_d}, {"max_count_d", o.max_count_d}};
  require_range(o.max_d >= 1 && o.max_count_d >= 1);
  for (std::size_t d = 1; d <= o.max_d; ++d) {
    const auto diagrams = all_path_diagrams(d);
    const auto functional = all_functional_matchings(d);
    const auto directed = all_directed_matchings(d);
    const std::size_t bad =
        count_failures(diagrams, [](const PathDiagram& x) {
          return bij_gp_inverse(bij_gp_forward(x)) == x && bij_kp_inverse(bij_kp_forward(x)) == x;
        }) +
        count_failures(functional, [](const FunctionalMatching& y) {
          return bij_gp_forward(bij_gp_inverse(y)) == y && bij_gk_forward(bij_gk_inverse(y)) == y;
        }) +
        count_failures(directed, [](const DirectedKMatching& z) {
          return bij_kp_forward(bij_kp_inverse(z)) == z && bij_gk_inverse(bij_gk_forward(z)) == z;
        });
    CaseResult c{"round-trips," + label({{"d", d}}), bad == 0, ""};
    if (bad) c.detail = std::to_string(bad) + " round trips failed";
    r.cases.push_back(std::move(c));
  }

  const PathDiagram example{Permutation::from_images({0, 2, 5, 3, 1, 4}), 0b101};
  const auto fm = bij_gp_forward(example);
  const bool ends_ok = left_ends(example) == std::vector<std::size_t>{0, 1, 4, 5};
  const auto arcs = arcs_of(fm);
  const bool arcs_ok = arcs == std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {5, 3}};
  CaseResult ex{"worked-example,d=6", ends_ok && arcs_ok && bij_gp_inverse(fm) == example, ""};
  if (!ex.pass) ex.detail = "sigma " + fm.sigma.to_cycle_string();
  r.cases.push_back(std::move(ex));

  for (std::size_t d = 1; d <= o.max_count_d; ++d) {
    const auto perms = all_permutations(d);
    const auto path = path_graph(d);
    const BigInt dfact = factorial(static_cast<unsigned>(d));
    for (std::size_t m = 0; 2 * m <= d; ++m) {
      BigInt functional_sum = 0;
      for (const auto& s : perms) functional_sum += functional_graph_matchings(s, m);
      const BigInt paths = dfact * count_matchings(path, m);
      const BigInt complete = power(2, static_cast<unsigned>(m)) * factorial(static_cast<unsigned>(d - m)) *
                              complete_graph_matchings(d, m);
      r.cases.push_back(compare("gp-count," + label({{"d", d}, {"m", m}}), paths, functional_sum));
      r.cases.push_back(compare("kp-count," + label({{"d", d}, {"m", m}}), complete, paths));
    }
  }
}

void metacycle(const VerifyOptions& o, VerificationReport& r) {
  r.parameters = {{"max_kn", o.max_kn}};
  for (std::size_t k = 3; 3 * k <= o.max_kn; ++k) {
    for (std::size_t n = 3; k * n <= o.max_kn; ++n) {
      const auto signed_ = signed_counts(k, n);
      const auto direct = matching_counts(cycle_graph(k * n));
      const auto composed = compose(cycle_poly(k), cycle_poly(n));
      bool ok = signed_.size() == direct.size();
      std::string detail;
      for (std::size_t m = 0; ok && m < direct.size(); ++m) {
        BigInt coeff = composed.coeff(k * n - 2 * m);
        if (m % 2 == 1) coeff = -coeff;
        if (signed_[m] != direct[m] || star_coefficient(k, n, m) != direct[m] || coeff != direct[m]) {
          ok = false;
          detail = "weight " + std::to_string(m) + ": signed " + to_decimal(signed_[m]) + ", a(C_kn) " +
                   to_decimal(direct[m]);
        }
      }
      const auto audit = audit_metacycle(k, n);
      if (ok && !audit.ok()) {
        ok = false;
        detail = "audit: projection " + std::to_string(audit.projection_violations) + ", image " +
                 std::to_string(audit.image_violations) + ", involution " +
                 std::to_string(audit.involution_violations);
      }
      r.cases.push_back({label({{"k", k}, {"n", n}}), ok, detail});
    }
  }
}

CaseResult real_rooted(std::string name, const Polynomial& p) {
  const Polynomial sf = square_free_part(p);
  const std::size_t roots = sturm_real_root_count(sf);
  const std::size_t degree = sf.degree().value_or(0);
  CaseResult c{std::move(name), roots == degree, ""};
  if (!c.pass) c.detail = std::to_string(roots) + " real roots, square-free degree " + std::to_string(degree);
  return c;
}

void real_roots(const VerifyOptions& o, VerificationReport& r) {
  r.parameters = {{"min_n", o.min_n}, {"max_n", o.max_n}, {"max_d", o.max_d}};
  require_range(o.min_n >= 1 && o.min_n <= o.max_n && o.max_d >= 1);
  for (const auto& g : small_graph_corpus()) {
    if (g.loopless) r.cases.push_back(real_rooted("graph," + g.name, matching_polynomial(g.graph)));
  }
  for (std::size_t n = o.min_n; n <= o.max_n; ++n) {
    for (std::size_t d = 1; d <= o.max_d; ++d) {
      r.cases.push_back(real_rooted("dmatch," + label({{"n", n}, {"d", d}}), dmatch_closed_form(n, d)));
    }
  }
}

using Runner = void (*)(const VerifyOptions&, VerificationReport&);

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> kRunners{
      {"composition", composition}, {"main-theorem", main_theorem}, {"hall-quotient", hall},
      {"divisibility", divisibility}, {"chebyshev", chebyshev},     {"bijections", bijections},
      {"metacycle", metacycle},       {"real-roots", real_roots}};
  return kRunners;
}

}  // namespace

bool VerificationReport::pass() const noexcept {
  for (const auto& c : cases) {
    if (!c.pass) return false;
  }
  return true;
}

std::optional<CaseResult> VerificationReport::first_counterexample() const {
  for (const auto& c : cases) {
    if (!c.pass) return c;
  }
  return std::nullopt;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : cases) {
    nlohmann::json j{{"case", c.label}, {"status", c.pass ? "pass" : "fail"}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    cs.push_back(std::move(j));
  }
  nlohmann::json out{{"identity", identity},
                     {"parameters", parameters},
                     {"status", pass() ? "pass" : "fail"},
                     {"cases", cs},
                     {"wall_time_s", seconds}};
  const auto bad = first_counterexample();
  out["first_counterexample"] = bad ? nlohmann::json{{"case", bad->label}, {"detail", bad->detail}} : nlohmann::json();
  return out;
}

const std::vector<std::string>& verification_names() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> names;
    for (const auto& [name, fn] : runners()) names.push_back(name);
    return names;
  }();
  return kNames;
}

VerifyOptions with_defaults(const std::string& identity, VerifyOptions o) {
  auto fill = [](std::size_t& v, std::size_t dflt) {
    if (v == 0) v = dflt;
  };
  if (identity == "composition") fill(o.max_kn, 16);
  if (identity == "metacycle") fill(o.max_kn, 15);
  if (identity == "main-theorem" || identity == "hall-quotient") {
    fill(o.max_n, 8);
    fill(o.max_d, 6);
  }
  if (identity == "divisibility" || identity == "real-roots") {
    fill(o.max_n, 6);
    fill(o.max_d, 5);
  }
  if (identity == "chebyshev") fill(o.max_n, 12);
  if (identity == "bijections") {
    fill(o.max_d, 5);
    fill(o.max_count_d, 7);
  }
  return o;
}

VerificationReport run_verification(const std::string& identity, const VerifyOptions& opts) {
  const auto it = runners().find(identity);
  if (it == runners().end()) throw Error(Errc::kInvalidArgument, "unknown identity '" + identity + "'");
  if (opts.min_n == 0) throw Error(Errc::kInvalidArgument, "n ranges start at 1");
  VerificationReport report;
  report.identity = identity;
  const auto start = std::chrono::steady_clock::now();
  it->second(opts, report);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require_range(!report.cases.empty());
  return report;
}

}  // namespace hallmatch
