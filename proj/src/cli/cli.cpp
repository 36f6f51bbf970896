#include "hallmatch/cli.hpp"

#include <bit>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hallmatch/bijections.hpp"
#include "hallmatch/dmatch.hpp"
#include "hallmatch/errors.hpp"
#include "hallmatch/json_io.hpp"
#include "hallmatch/matching.hpp"
#include "hallmatch/metacycle.hpp"
#include "hallmatch/verify.hpp"

namespace hallmatch::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::kParseError:
    case Errc::kInvalidArgument:
    case Errc::kInvalidGraph:
    case Errc::kUnsupportedSize:
    case Errc::kBudgetExceeded:
      return kUsage;
    default:
      return kFailed;
  }
}

json coeff_table(const std::vector<BigInt>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

// a(G, i) read back from the signed coefficients of M_G.
std::vector<BigInt> counts_from_polynomial(const Polynomial& p, std::size_t nv) {
  std::vector<BigInt> out;
  for (std::size_t i = 0; 2 * i <= nv; ++i) {
    BigInt c = p.coeff(nv - 2 * i);
    out.push_back(i % 2 == 0 ? c : BigInt(-c));
  }
  return out;
}

struct MatchpolyArgs {
  std::string graph_file;
  std::string method = "brute";
};

int cmd_matchpoly(const MatchpolyArgs& a, std::ostream& out, std::ostream& err) {
  std::ifstream in(a.graph_file);
  if (!in) {
    err << "cannot read " << a.graph_file << "\n";
    return kUsage;
  }
  std::stringstream text;
  text << in.rdbuf();
  const SymmetricGraph g = parse_graph(text.str());
  const Polynomial p = a.method == "recursive" ? matching_polynomial_recursive(g) : matching_polynomial(g);
  json j = polynomial_to_json(p);
  j["matchings"] = coeff_table(counts_from_polynomial(p, g.num_vertices()));
  out << j.dump() << "\n";
  err << "M_G = " << to_string(p) << "\n";
  return kOk;
}

struct DmatchArgs {
  std::size_t n = 0;
  std::size_t d = 0;
  std::string method = "closed-form";
  bool verify_all = false;
  EnumerationConfig cfg;
};

int cmd_dmatch(const DmatchArgs& a, std::ostream& out, std::ostream& err) {
  const auto method = parse_method(a.method);
  if (!method) {
    err << "unknown method " << a.method << "\n";
    return kUsage;
  }
  if (!a.verify_all) {
    const Polynomial p = dmatch(*method, a.n, a.d, a.cfg);
    json j = polynomial_to_json(p);
    j["n"] = a.n;
    j["d"] = a.d;
    j["method"] = a.method;
    out << j.dump() << "\n";
    err << "C_{" << a.n << "," << a.d << "} = " << to_string(p) << "\n";
    return kOk;
  }

  const Polynomial reference = dmatch_closed_form(a.n, a.d);
  json methods = json::object();
  bool agree = true;
  for (DmatchMethod m : all_methods()) {
    const std::string name(method_name(m));
    try {
      const Polynomial p = dmatch(m, a.n, a.d, a.cfg);
      const bool same = p == reference;
      agree = agree && same;
      methods[name] = {{"status", same ? "agree" : "disagree"}, {"coeffs", polynomial_to_json(p)["coeffs"]}};
    } catch (const Error& e) {
      if (e.code() != Errc::kBudgetExceeded) throw;
      methods[name] = {{"status", "skipped"}, {"reason", e.what()}};
    }
  }
  json j = polynomial_to_json(reference);
  j["n"] = a.n;
  j["d"] = a.d;
  j["methods"] = methods;
  j["status"] = agree ? "pass" : "fail";
  out << j.dump(2) << "\n";
  err << (agree ? "all affordable methods agree" : "methods disagree") << "\n";
  return agree ? kOk : kFailed;
}

struct MetacycleArgs {
  std::size_t k = 0;
  std::size_t n = 0;
  bool check_involution = false;
  std::optional<std::size_t> dump;
};

json metacycle_to_json(const MetacycleMatching& m) {
  json outer = json::array();
  for (std::size_t e = 0; e < m.k; ++e) {
    if ((m.outer >> e) & 1) outer.push_back(e);
  }
  json inner = json::array();
  for (const auto& mask : m.inner) {
    if (!mask) {
      inner.push_back(nullptr);
      continue;
    }
    json edges = json::array();
    for (std::size_t c = 0; c < m.n; ++c) {
      if ((*mask >> c) & 1) edges.push_back(c);
    }
    inner.push_back(edges);
  }
  return {{"outer_edges", outer}, {"inner", inner}, {"string", string_label(m).to_string()},
          {"weight", weight(m)},  {"sign", sign(m)},  {"bad", classify_bad(m)}};
}

int cmd_metacycle(const MetacycleArgs& a, std::ostream& out, std::ostream& err) {
  const auto signed_ = signed_counts(a.k, a.n);
  const auto direct = matching_counts(cycle_graph(a.k * a.n));
  bool ok = true;
  json weights = json::array();
  for (std::size_t m = 0; m < direct.size(); ++m) {
    const bool match = signed_[m] == direct[m];
    ok = ok && match;
    weights.push_back({{"m", m},
                       {"signed_count", to_decimal(signed_[m])},
                       {"cycle_matchings", to_decimal(direct[m])},
                       {"match", match}});
  }
  json j{{"k", a.k}, {"n", a.n}, {"weights", weights}};
  if (a.check_involution) {
    const auto audit = audit_metacycle(a.k, a.n);
    ok = ok && audit.ok();
    j["involution"] = {{"metacycle_matchings", audit.metacycle_matchings},
                       {"cycle_matchings", audit.cycle_matchings},
                       {"image_size", audit.image_size},
                       {"bad", audit.bad},
                       {"projection_violations", audit.projection_violations},
                       {"image_violations", audit.image_violations},
                       {"involution_violations", audit.involution_violations},
                       {"bad_signed_counts", coeff_table(audit.bad_signed_counts)}};
  }
  if (a.dump) {
    json dumped = json::array();
    for_each_metacycle(a.k, a.n, [&](const MetacycleMatching& m) {
      if (weight(m) == *a.dump) dumped.push_back(metacycle_to_json(m));
    });
    j["dump"] = {{"m", *a.dump}, {"matchings", dumped}};
  }
  j["status"] = ok ? "pass" : "fail";
  out << j.dump(2) << "\n";
  err << "metacycle (" << a.k << "," << a.n << "): " << (ok ? "pass" : "fail") << "\n";
  return ok ? kOk : kFailed;
}

struct BijectionArgs {
  std::size_t d = 0;
  std::string prop = "all";
  std::uint64_t budget = 1'000'000;
};

int cmd_bijections(const BijectionArgs& a, std::ostream& out, std::ostream& err) {
  const std::size_t d = a.d;
  // d! path diagrams per path matching, and the path P_d has F(d+1) matchings.
  BigInt fib_prev = 1, fib = 1;
  for (std::size_t i = 1; i < d; ++i) {
    fib_prev += fib;
    std::swap(fib_prev, fib);
  }
  if (d > 12 || factorial(static_cast<unsigned>(d)) * fib > BigInt(static_cast<unsigned long>(a.budget))) {
    throw Error(Errc::kBudgetExceeded, "enumerating all diagrams of size " + std::to_string(d) + " exceeds the budget");
  }
  const auto diagrams = all_path_diagrams(d);
  const auto functional = all_functional_matchings(d);
  const auto directed = all_directed_matchings(d);
  std::vector<BigInt> n_path(d / 2 + 1, 0), n_functional(d / 2 + 1, 0), n_directed(d / 2 + 1, 0);
  for (const auto& x : diagrams) n_path[static_cast<std::size_t>(std::popcount(x.matching))] += 1;
  for (const auto& y : functional) n_functional[static_cast<std::size_t>(std::popcount(y.sources))] += 1;
  for (const auto& z : directed) n_directed[z.arcs.size()] += 1;

  auto table = [&](const std::vector<BigInt>& lhs, const std::vector<BigInt>& rhs, bool& ok) {
    json rows = json::array();
    for (std::size_t m = 0; m < lhs.size(); ++m) {
      ok = ok && lhs[m] == rhs[m];
      rows.push_back({{"m", m}, {"lhs", to_decimal(lhs[m])}, {"rhs", to_decimal(rhs[m])}});
    }
    return rows;
  };

  bool ok = true;
  json props = json::object();
  const bool all = a.prop == "all";
  if (all || a.prop == "gp") {
    bool trip = true;
    for (const auto& x : diagrams) trip = trip && bij_gp_inverse(bij_gp_forward(x)) == x;
    for (const auto& y : functional) trip = trip && bij_gp_forward(bij_gp_inverse(y)) == y;
    bool counts = true;
    props["gp"] = {{"counts", table(n_path, n_functional, counts)}, {"round_trip", trip ? "pass" : "fail"}};
    ok = ok && trip && counts;
  }
  if (all || a.prop == "kp") {
    bool trip = true;
    for (const auto& x : diagrams) trip = trip && bij_kp_inverse(bij_kp_forward(x)) == x;
    for (const auto& z : directed) trip = trip && bij_kp_forward(bij_kp_inverse(z)) == z;
    bool counts = true;
    props["kp"] = {{"counts", table(n_directed, n_path, counts)}, {"round_trip", trip ? "pass" : "fail"}};
    ok = ok && trip && counts;
  }
  if (all || a.prop == "gk") {
    bool trip = true;
    for (const auto& z : directed) trip = trip && bij_gk_inverse(bij_gk_forward(z)) == z;
    for (const auto& y : functional) trip = trip && bij_gk_forward(bij_gk_inverse(y)) == y;
    bool counts = true;
    props["gk"] = {{"counts", table(n_directed, n_functional, counts)}, {"round_trip", trip ? "pass" : "fail"}};
    ok = ok && trip && counts;
  }
  json j{{"d", d}, {"props", props}, {"status", ok ? "pass" : "fail"}};
  out << j.dump(2) << "\n";
  err << "bijections d=" << d << ": " << (ok ? "pass" : "fail") << "\n";
  return ok ? kOk : kFailed;
}

int cmd_cheby(std::size_t n, std::ostream& out, std::ostream& err) {
  const auto un = static_cast<unsigned>(n);
  const Polynomial t = chebyshev_T(un);
  const Polynomial u = chebyshev_U(un);
  const bool t_bridge = dilate(cycle_poly(n), 2) == t * BigInt(2);
  const bool u_bridge = dilate(path_poly(n), 2) == u;
  json j{{"n", n},
         {"T", polynomial_to_json(t)},
         {"U", polynomial_to_json(u)},
         {"cycle_poly", polynomial_to_json(cycle_poly(n))},
         {"path_poly", polynomial_to_json(path_poly(n))},
         {"bridge", {{"T", t_bridge}, {"U", u_bridge}}}};
  out << j.dump() << "\n";
  err << "T_" << n << " = " << to_string(t) << ", U_" << n << " = " << to_string(u) << "\n";
  return kOk;
}

struct VerifyArgs {
  std::string identity;
  VerifyOptions opts;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const VerificationReport report = run_verification(a.identity, a.opts);
  out << report.to_json().dump(2) << "\n";
  std::size_t failed = 0;
  for (const auto& c : report.cases) failed += c.pass ? 0 : 1;
  err << a.identity << ": " << report.cases.size() - failed << "/" << report.cases.size() << " cases pass";
  if (const auto bad = report.first_counterexample()) err << "; first failure " << bad->label << " (" << bad->detail << ")";
  err << "\n";
  return report.pass() ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact matching polynomials, cycle covers and their identities", "hallmatch"};
  app.require_subcommand(1);

  MatchpolyArgs mp;
  auto* matchpoly = app.add_subcommand("matchpoly", "Matching polynomial of a graph file");
  matchpoly->add_option("--graph", mp.graph_file, "JSON graph file")->required();
  matchpoly->add_option("--method", mp.method)->check(CLI::IsMember({"brute", "recursive"}));

  DmatchArgs dm;
  auto* dmatch_cmd = app.add_subcommand("dmatch", "d-matching polynomial of C_n");
  dmatch_cmd->add_option("--n", dm.n)->required()->check(CLI::PositiveNumber);
  dmatch_cmd->add_option("--d", dm.d)->required()->check(CLI::PositiveNumber);
  dmatch_cmd->add_option("--method", dm.method)
      ->check(CLI::IsMember({"labelings", "permutations", "cycle-types", "closed-form", "hall-quotient"}));
  dmatch_cmd->add_flag("--verify-all", dm.verify_all, "Run every affordable method and compare");
  dmatch_cmd->add_option("--budget", dm.cfg.budget, "Cap on enumerated labelings or permutations");
  dmatch_cmd->add_option("--jobs", dm.cfg.jobs, "Worker threads (0 = all cores)");

  MetacycleArgs mc;
  std::size_t dump_weight = 0;
  auto* metacycle_cmd = app.add_subcommand("metacycle", "Signed metacycle counts against matchings of C_kn");
  metacycle_cmd->add_option("--k", mc.k)->required();
  metacycle_cmd->add_option("--n", mc.n)->required();
  metacycle_cmd->add_flag("--check-involution", mc.check_involution);
  auto* dump_opt = metacycle_cmd->add_option("--dump", dump_weight, "List the matchings of this weight");

  BijectionArgs bj;
  auto* bij_cmd = app.add_subcommand("bijections", "Exhaustive bijection and count checks");
  bij_cmd->add_option("--d", bj.d)->required()->check(CLI::PositiveNumber);
  bij_cmd->add_option("--prop", bj.prop)->check(CLI::IsMember({"gp", "kp", "gk", "all"}));
  bij_cmd->add_option("--budget", bj.budget);

  std::size_t cheby_n = 0;
  auto* cheby = app.add_subcommand("cheby", "Chebyshev polynomials and their matching counterparts");
  cheby->add_option("--n", cheby_n)->required();

  VerifyArgs vf;
  VerifyOptions given;
  auto* verify = app.add_subcommand("verify", "Check an identity over a parameter range");
  verify->add_option("identity", vf.identity)->required()->check(CLI::IsMember(verification_names()));
  auto* o_kn = verify->add_option("--max-kn", given.max_kn);
  auto* o_min_n = verify->add_option("--min-n", given.min_n);
  auto* o_n = verify->add_option("--max-n", given.max_n);
  auto* o_d = verify->add_option("--max-d", given.max_d);
  auto* o_cd = verify->add_option("--max-count-d", given.max_count_d);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*matchpoly) return cmd_matchpoly(mp, out, err);
    if (*dmatch_cmd) return cmd_dmatch(dm, out, err);
    if (*metacycle_cmd) {
      if (*dump_opt) mc.dump = dump_weight;
      return cmd_metacycle(mc, out, err);
    }
    if (*bij_cmd) return cmd_bijections(bj, out, err);
    if (*cheby) return cmd_cheby(cheby_n, out, err);
    if (*verify) {
      vf.opts = with_defaults(vf.identity, VerifyOptions{});
      if (*o_kn) vf.opts.max_kn = given.max_kn;
      if (*o_min_n) vf.opts.min_n = given.min_n;
      if (*o_n) vf.opts.max_n = given.max_n;
      if (*o_d) vf.opts.max_d = given.max_d;
      if (*o_cd) vf.opts.max_count_d = given.max_count_d;
      return cmd_verify(vf, out, err);
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kUsage;
}

}  // namespace hallmatch::cli
