#include "hallmatch/metacycle.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "hallmatch/errors.hpp"
#include "hallmatch/graph.hpp"
#include "hallmatch/matching.hpp"

namespace hallmatch {

namespace {

constexpr std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

bool is_cycle_matching(std::uint64_t mask, std::size_t len) {
  if (len < 64 && (mask >> len) != 0) return false;
  const std::uint64_t rotated = (mask >> 1) | ((mask & 1) << (len - 1));
  return (mask & rotated) == 0;
}

// Bits start, start+2, ... up to and including last (empty if last < start).
std::uint32_t alternating(std::size_t start, std::ptrdiff_t last) {
  std::uint32_t out = 0;
  for (std::ptrdiff_t c = static_cast<std::ptrdiff_t>(start); c <= last; c += 2) out |= std::uint32_t{1} << c;
  return out;
}

struct Layout {
  std::size_t k;
  std::size_t n;

  std::uint32_t hop() const { return std::uint32_t{1} << (n - 1); }
  std::uint32_t path_bits() const { return hop() - 1; }
  std::size_t next(std::size_t v) const { return (v + 1) % k; }
  std::size_t prev(std::size_t v) const { return (v + k - 1) % k; }
  std::size_t add(std::size_t v, std::size_t t) const { return (v + t) % k; }

  std::uint32_t row(std::uint64_t mask, std::size_t r) const {
    return static_cast<std::uint32_t>(mask >> (r * n)) & path_bits();
  }
  bool zag(std::uint64_t mask, std::size_t r) const { return (mask >> (r * n + n - 1)) & 1; }
  void set_row(std::uint64_t& mask, std::size_t r, std::uint32_t edges) const {
    mask |= static_cast<std::uint64_t>(edges & path_bits()) << (r * n);
  }
  void set_zag(std::uint64_t& mask, std::size_t r) const { mask |= bit(r * n + n - 1); }

  // Rows i and j completely matched inside the row (possible only for odd n).
  std::uint32_t perfect_first() const { return alternating(0, static_cast<std::ptrdiff_t>(n) - 3); }
  std::uint32_t perfect_last() const { return alternating(1, static_cast<std::ptrdiff_t>(n) - 2); }
  // The pattern toggled against an outer edge for even n.
  std::uint32_t perfect_with_hop() const { return alternating(1, static_cast<std::ptrdiff_t>(n) - 3) | hop(); }
  std::uint32_t perfect_without_hop() const { return alternating(0, static_cast<std::ptrdiff_t>(n) - 2); }

  // Smallest c in [0, n-2] missing from both masks.
  std::optional<std::size_t> swap_point(std::uint32_t a, std::uint32_t b) const {
    for (std::size_t c = 0; c + 1 < n; ++c) {
      if (!((a | b) >> c & 1)) return c;
    }
    return std::nullopt;
  }
  // a below c joined with b above c.
  static std::uint32_t splice(std::uint32_t a, std::uint32_t b, std::size_t c) {
    const std::uint32_t below = (std::uint32_t{1} << c) - 1;
    const std::uint32_t above = ~((std::uint32_t{1} << (c + 1)) - 1);
    return (a & below) | (b & above);
  }
};

std::size_t block_end(const Generator& g, std::size_t k) { return (g.start + g.length() - 1) % k; }

}  // namespace

void check_metacycle_size(std::size_t k, std::size_t n) {
  if (k < 3 || n < 3 || k * n > 63) {
    throw Error(Errc::kUnsupportedSize, "metacycles need k >= 3, n >= 3 and kn <= 63");
  }
}

std::vector<std::uint64_t> cycle_matching_masks(std::size_t len) {
  if (len < 3 || len > 63) throw Error(Errc::kUnsupportedSize, "cycle length must be in [3, 63]");
  std::vector<std::uint64_t> out;
  // Extend masks one edge at a time; the wrap-around pair is checked at the end.
  std::vector<std::uint64_t> frontier{0};
  for (std::size_t e = 0; e < len; ++e) {
    std::vector<std::uint64_t> next;
    next.reserve(frontier.size() * 2);
    for (std::uint64_t m : frontier) {
      next.push_back(m);
      if (e == 0 || !(m & bit(e - 1))) next.push_back(m | bit(e));
    }
    frontier = std::move(next);
  }
  for (std::uint64_t m : frontier) {
    if (!((m & 1) && (m & bit(len - 1)))) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_valid(const MetacycleMatching& m) {
  if (m.k < 3 || m.n < 3 || m.n > 32 || m.inner.size() != m.k) return false;
  if (!is_cycle_matching(m.outer, m.k)) return false;
  for (std::size_t v = 0; v < m.k; ++v) {
    const bool covered = ((m.outer >> v) & 1) || ((m.outer >> ((v + m.k - 1) % m.k)) & 1);
    if (covered != !m.inner[v].has_value()) return false;
    if (m.inner[v] && !is_cycle_matching(*m.inner[v], m.n)) return false;
  }
  return true;
}

void for_each_metacycle(std::size_t k, std::size_t n, const std::function<void(const MetacycleMatching&)>& visit) {
  check_metacycle_size(k, n);
  const auto inner_masks = cycle_matching_masks(n);
  for (std::uint64_t outer : cycle_matching_masks(k)) {
    MetacycleMatching m{k, n, outer, std::vector<std::optional<std::uint32_t>>(k)};
    std::vector<std::size_t> free_vertices;
    for (std::size_t v = 0; v < k; ++v) {
      const bool covered = ((outer >> v) & 1) || ((outer >> ((v + k - 1) % k)) & 1);
      if (!covered) free_vertices.push_back(v);
    }
    // Odometer over the inner matchings of the free vertices.
    std::vector<std::size_t> digit(free_vertices.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < free_vertices.size(); ++i) {
        m.inner[free_vertices[i]] = static_cast<std::uint32_t>(inner_masks[digit[i]]);
      }
      visit(m);
      std::size_t i = 0;
      while (i < digit.size() && ++digit[i] == inner_masks.size()) digit[i++] = 0;
      if (i == digit.size()) break;
    }
  }
}

std::vector<MetacycleMatching> enumerate_metacycle(std::size_t k, std::size_t n) {
  std::vector<MetacycleMatching> out;
  for_each_metacycle(k, n, [&](const MetacycleMatching& m) { out.push_back(m); });
  return out;
}

std::size_t weight(const MetacycleMatching& m) {
  std::size_t w = m.n * static_cast<std::size_t>(std::popcount(m.outer));
  for (const auto& inner : m.inner) {
    if (inner) w += static_cast<std::size_t>(std::popcount(*inner));
  }
  return w;
}

int sign(const MetacycleMatching& m) {
  const std::size_t ek = static_cast<std::size_t>(std::popcount(m.outer));
  return ((m.n - 1) * ek) % 2 == 0 ? 1 : -1;
}

std::vector<BigInt> signed_counts(std::size_t k, std::size_t n) {
  std::vector<long long> acc(k * n / 2 + 1, 0);
  for_each_metacycle(k, n, [&](const MetacycleMatching& m) { acc[weight(m)] += sign(m); });
  std::vector<BigInt> out;
  for (long long v : acc) out.emplace_back(static_cast<long>(v));
  return out;
}

BigInt signed_count(std::size_t k, std::size_t n, std::size_t m) {
  const auto all = signed_counts(k, n);
  return m < all.size() ? all[m] : BigInt(0);
}

BigInt star_coefficient(std::size_t k, std::size_t n, std::size_t m) {
  if (k == 0 || n == 0) throw Error(Errc::kInvalidArgument, "k and n must be positive");
  const auto outer = matching_counts(cycle_graph(k));
  const auto single = matching_counts(cycle_graph(n));
  BigInt total = 0;
  for (std::size_t i = 0; i < outer.size() && 2 * i <= k; ++i) {
    if (i * n > m) break;
    // a((k-2i) C_n, .) as a convolution power.
    std::vector<BigInt> copies{BigInt(1)};
    for (std::size_t c = 0; c < k - 2 * i; ++c) {
      std::vector<BigInt> next(copies.size() + single.size() - 1, BigInt(0));
      for (std::size_t a = 0; a < copies.size(); ++a) {
        for (std::size_t b = 0; b < single.size(); ++b) next[a + b] += copies[a] * single[b];
      }
      copies = std::move(next);
    }
    const std::size_t j = m - i * n;
    BigInt term = outer[i] * (j < copies.size() ? copies[j] : BigInt(0));
    if ((i * (n - 1)) % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

MetacycleMatching project_matching(std::size_t k, std::size_t n, std::uint64_t cycle_edges) {
  check_metacycle_size(k, n);
  if (!is_cycle_matching(cycle_edges, k * n)) throw Error(Errc::kNotAMatching, "not a matching of C_kn");
  const Layout L{k, n};
  MetacycleMatching out{k, n, 0, std::vector<std::optional<std::uint32_t>>(k)};

  // Rows i and j close a component of length >= 2: interior rows already
  // placed, the tail swap decides vertices j-1 and j.
  auto close = [&](std::size_t i, std::size_t j, bool extra_hop) {
    const std::uint32_t a = L.row(cycle_edges, i);
    const std::uint32_t b = L.row(cycle_edges, j);
    const auto c = L.swap_point(a, b);
    if (!c) {
      if (n % 2 == 1 && a == L.perfect_first() && b == L.perfect_last()) {
        out.outer |= bit(L.prev(j));
        out.inner[L.prev(j)].reset();
        out.inner[j].reset();
        return;
      }
      throw std::logic_error("no tail-swap point outside the completely matched case");
    }
    out.inner[j] = Layout::splice(a, b, *c) | (extra_hop ? L.hop() : 0);
    out.inner[L.prev(j)] = Layout::splice(b, a, *c) | L.hop();
  };

  bool all_zags = true;
  for (std::size_t r = 0; r < k; ++r) all_zags = all_zags && L.zag(cycle_edges, r);

  if (all_zags) {
    for (std::size_t r = 1; r + 1 < k; ++r) out.inner[r - 1] = L.row(cycle_edges, r) | L.hop();
    close(0, k - 1, true);
    return out;
  }

  for (std::size_t i = 0; i < k; ++i) {
    if (L.zag(cycle_edges, L.prev(i))) continue;
    std::size_t j = i;
    while (L.zag(cycle_edges, j)) j = L.next(j);
    if (j == i) {
      out.inner[i] = L.row(cycle_edges, i);
      continue;
    }
    for (std::size_t r = L.next(i); r != j; r = L.next(r)) out.inner[L.prev(r)] = L.row(cycle_edges, r) | L.hop();
    close(i, j, false);
  }
  return out;
}

std::optional<std::uint64_t> lift_metacycle(const MetacycleMatching& m) {
  if (!is_valid(m)) throw Error(Errc::kInvalidArgument, "not a metacycle matching");
  check_metacycle_size(m.k, m.n);
  const Layout L{m.k, m.n};
  const std::uint32_t no_hop = L.path_bits();
  std::uint64_t mask = 0;
  for (const auto& g : decode_generators(string_label(m))) {
    if (g.kind == Generator::Kind::kAllHops) {
      for (std::size_t r = 0; r < m.k; ++r) L.set_zag(mask, r);
      for (std::size_t r = 1; r + 1 < m.k; ++r) L.set_row(mask, r, *m.inner[r - 1] & no_hop);
      L.set_row(mask, 0, *m.inner[m.k - 2] & no_hop);
      L.set_row(mask, m.k - 1, *m.inner[m.k - 1] & no_hop);
      continue;
    }
    const std::size_t i = g.start;
    const std::size_t j = block_end(g, m.k);
    if (i == j) {
      L.set_row(mask, i, *m.inner[i]);
      continue;
    }
    for (std::size_t r = i; r != j; r = L.next(r)) L.set_zag(mask, r);
    for (std::size_t r = L.next(i); r != j; r = L.next(r)) L.set_row(mask, r, *m.inner[L.prev(r)] & no_hop);
    if (g.kind == Generator::Kind::kHopsPair) {
      if (m.n % 2 == 0) return std::nullopt;
      L.set_row(mask, i, L.perfect_first());
      L.set_row(mask, j, L.perfect_last());
      continue;
    }
    const std::uint32_t ip = *m.inner[j];
    const std::uint32_t jp = *m.inner[L.prev(j)] & no_hop;
    const auto c = L.swap_point(ip, jp);
    if (!c) return std::nullopt;
    L.set_row(mask, i, Layout::splice(ip, jp, *c));
    L.set_row(mask, j, Layout::splice(jp, ip, *c));
  }
  return mask;
}

CycleString CycleString::from_string(std::string_view text) {
  std::vector<int> raw;  // 0 = H, 1 = r, 2 = μ
  for (std::size_t i = 0; i < text.size();) {
    if (text[i] == 'H') {
      raw.push_back(0);
      ++i;
    } else if (text[i] == 'r') {
      raw.push_back(1);
      ++i;
    } else if (text[i] == 'm') {
      raw.push_back(2);
      ++i;
    } else if (text.substr(i, 2) == "\xce\xbc") {
      raw.push_back(2);
      i += 2;
    } else {
      throw Error(Errc::kMalformedString, "unexpected character in cycle string");
    }
  }
  CycleString s;
  s.symbols.resize(raw.size(), Symbol::kHop);
  const std::size_t k = raw.size();
  std::size_t origin = 0;
  bool found = false;
  for (std::size_t i = 0; i < k && !found; ++i) {
    if (raw[i] != 2) {
      origin = (i + 1) % k;
      found = true;
    }
  }
  std::size_t run = 0;
  for (std::size_t t = 0; t < k; ++t) {
    const std::size_t p = (origin + t) % k;
    if (raw[p] == 2) {
      s.symbols[p] = run % 2 == 0 ? Symbol::kMuOpen : Symbol::kMuClose;
      ++run;
      continue;
    }
    if (run % 2 == 1) throw Error(Errc::kMalformedString, "unpaired μ");
    run = 0;
    s.symbols[p] = raw[p] == 0 ? Symbol::kHop : Symbol::kRest;
  }
  if (run % 2 == 1) throw Error(Errc::kMalformedString, "unpaired μ");
  return s;
}

std::string CycleString::to_string() const {
  std::string out;
  for (Symbol s : symbols) out += s == Symbol::kHop ? "H" : s == Symbol::kRest ? "r" : "\xce\xbc";
  return out;
}

CycleString string_label(const MetacycleMatching& m) {
  CycleString s;
  s.symbols.resize(m.k, Symbol::kRest);
  for (std::size_t v = 0; v < m.k; ++v) {
    if ((m.outer >> v) & 1) {
      s.symbols[v] = Symbol::kMuOpen;
      s.symbols[(v + 1) % m.k] = Symbol::kMuClose;
    } else if (m.inner[v] && (*m.inner[v] >> (m.n - 1) & 1)) {
      s.symbols[v] = Symbol::kHop;
    }
  }
  return s;
}

std::string Generator::to_string() const {
  std::string out = "H";
  if (kind != Kind::kAllHops && hops == 0) out.clear();
  if (hops > 1 || kind == Kind::kAllHops) out += "^" + std::to_string(hops);
  if (kind == Kind::kHopsRest) out += "r";
  if (kind == Kind::kHopsPair) out += "\xce\xbc\xce\xbc";
  return out;
}

std::vector<Generator> decode_generators(const CycleString& s) {
  const std::size_t k = s.symbols.size();
  if (k == 0) throw Error(Errc::kMalformedString, "empty cycle string");
  bool all_hops = true;
  for (Symbol x : s.symbols) all_hops = all_hops && x == Symbol::kHop;
  if (all_hops) return {Generator{Generator::Kind::kAllHops, k, 0}};

  std::size_t origin = 0;
  while (s.symbols[(origin + k - 1) % k] != Symbol::kRest && s.symbols[(origin + k - 1) % k] != Symbol::kMuClose) {
    if (++origin == k) throw Error(Errc::kMalformedString, "no closing symbol");
  }
  std::vector<Generator> out;
  std::size_t hops = 0;
  std::size_t start = origin;
  for (std::size_t t = 0; t < k; ++t) {
    const std::size_t p = (origin + t) % k;
    switch (s.symbols[p]) {
      case Symbol::kHop:
        ++hops;
        break;
      case Symbol::kRest:
        out.push_back({Generator::Kind::kHopsRest, hops, start});
        hops = 0;
        start = (p + 1) % k;
        break;
      case Symbol::kMuOpen:
        if (t + 1 == k || s.symbols[(p + 1) % k] != Symbol::kMuClose) {
          throw Error(Errc::kMalformedString, "μ not followed by its partner");
        }
        out.push_back({Generator::Kind::kHopsPair, hops, start});
        hops = 0;
        ++t;
        start = (p + 2) % k;
        break;
      case Symbol::kMuClose:
        throw Error(Errc::kMalformedString, "closing μ without an opening one");
    }
  }
  return out;
}

namespace {

// The toggleable block with the smallest end vertex, if any.
std::optional<Generator> first_bad_block(const MetacycleMatching& m) {
  if (m.n % 2 == 1) return std::nullopt;
  const Layout L{m.k, m.n};
  std::optional<Generator> best;
  std::size_t best_end = m.k;
  for (const auto& g : decode_generators(string_label(m))) {
    const std::size_t e = block_end(g, m.k);
    bool toggleable = g.kind == Generator::Kind::kHopsPair;
    if (g.kind == Generator::Kind::kHopsRest && g.hops >= 1) {
      toggleable = *m.inner[L.prev(e)] == L.perfect_with_hop() && *m.inner[e] == L.perfect_without_hop();
    }
    if (toggleable && e < best_end) {
      best = g;
      best_end = e;
    }
  }
  return best;
}

}  // namespace

bool classify_bad(const MetacycleMatching& m) {
  if (!is_valid(m)) throw Error(Errc::kInvalidArgument, "not a metacycle matching");
  return first_bad_block(m).has_value();
}

MetacycleMatching involution_f(const MetacycleMatching& m) {
  if (!is_valid(m)) throw Error(Errc::kInvalidArgument, "not a metacycle matching");
  const auto g = first_bad_block(m);
  if (!g) throw Error(Errc::kNotBad, "matching is not in the bad set");
  const Layout L{m.k, m.n};
  const std::size_t e = block_end(*g, m.k);
  const std::size_t p = L.prev(e);
  MetacycleMatching out = m;
  if (g->kind == Generator::Kind::kHopsPair) {
    out.outer &= ~bit(p);
    out.inner[p] = L.perfect_with_hop();
    out.inner[e] = L.perfect_without_hop();
  } else {
    out.outer |= bit(p);
    out.inner[p].reset();
    out.inner[e].reset();
  }
  return out;
}

namespace {

std::vector<std::uint64_t> key_of(const MetacycleMatching& m) {
  std::vector<std::uint64_t> key{m.outer};
  for (const auto& inner : m.inner) key.push_back(inner ? *inner : ~std::uint64_t{0});
  return key;
}

}  // namespace

MetacycleAudit audit_metacycle(std::size_t k, std::size_t n) {
  check_metacycle_size(k, n);
  MetacycleAudit audit;
  audit.k = k;
  audit.n = n;
  audit.bad_signed_counts.assign(k * n / 2 + 1, BigInt(0));

  std::set<std::vector<std::uint64_t>> image;
  for (std::uint64_t mask : cycle_matching_masks(k * n)) {
    ++audit.cycle_matchings;
    const MetacycleMatching m = project_matching(k, n, mask);
    const bool fresh = image.insert(key_of(m)).second;
    if (!fresh || !is_valid(m) || weight(m) != static_cast<std::size_t>(std::popcount(mask))) {
      ++audit.projection_violations;
    }
  }
  audit.image_size = image.size();

  for_each_metacycle(k, n, [&](const MetacycleMatching& m) {
    ++audit.metacycle_matchings;
    const bool bad = classify_bad(m);
    const bool in_image = image.count(key_of(m)) > 0;
    const auto lifted = lift_metacycle(m);
    if (bad == in_image || lifted.has_value() != in_image) ++audit.image_violations;
    if (lifted && !(project_matching(k, n, *lifted) == m)) ++audit.image_violations;
    if (!bad) return;
    ++audit.bad;
    audit.bad_signed_counts[weight(m)] += sign(m);
    const MetacycleMatching f = involution_f(m);
    if (f == m || !classify_bad(f) || !(involution_f(f) == m) || weight(f) != weight(m) || sign(f) != -sign(m)) {
      ++audit.involution_violations;
    }
  });
  return audit;
}

}  // namespace hallmatch
