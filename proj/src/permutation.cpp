#include "hallmatch/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hallmatch/errors.hpp"

namespace hallmatch {

namespace {

void check_degree(std::size_t degree) {
  if (degree > Permutation::kMaxDegree) {
    throw Error(Errc::kUnsupportedSize,
                "permutation degree " + std::to_string(degree) + " exceeds " +
                    std::to_string(Permutation::kMaxDegree));
  }
}

}  // namespace

Permutation::Permutation(std::size_t degree) : degree_(degree), lanes_(simd::identity_perm16()) {
  check_degree(degree);
}

Permutation Permutation::from_images(std::span<const std::size_t> images) {
  Permutation p(images.size());
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] >= images.size() || seen[images[i]]) {
      throw Error(Errc::kInvalidArgument, "images do not form a bijection");
    }
    seen[images[i]] = true;
    p.lanes_.lanes[i] = static_cast<std::uint8_t>(images[i]);
  }
  return p;
}

Permutation Permutation::from_images(std::initializer_list<std::size_t> images) {
  std::vector<std::size_t> v(images);
  return from_images(std::span<const std::size_t>(v));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::initializer_list<std::initializer_list<std::size_t>> cycles) {
  std::vector<std::size_t> images(degree);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    std::vector<std::size_t> pts(cycle);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i] >= degree || used[pts[i]]) {
        throw Error(Errc::kInvalidArgument, "cycles are not disjoint points of the domain");
      }
      used[pts[i]] = true;
      images[pts[i]] = pts[(i + 1) % pts.size()];
    }
  }
  return from_images(std::span<const std::size_t>(images));
}

std::vector<std::size_t> Permutation::images() const {
  std::vector<std::size_t> out(degree_);
  for (std::size_t i = 0; i < degree_; ++i) out[i] = lanes_.lanes[i];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation inv(degree_);
  for (std::size_t i = 0; i < degree_; ++i) inv.lanes_.lanes[lanes_.lanes[i]] = static_cast<std::uint8_t>(i);
  return inv;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree_ != degree_) throw Error(Errc::kDomainMismatch, "permutation degrees differ");
  Permutation out(degree_);
  out.lanes_ = simd::compose(lanes_, next.lanes_);
  return out;
}

bool Permutation::is_identity() const noexcept { return lanes_ == simd::identity_perm16(); }

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(degree_, false);
  for (std::size_t start = 0; start < degree_; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t p = start; !seen[p]; p = lanes_.lanes[p]) {
      seen[p] = true;
      cycle.push_back(p);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  bool any = false;
  for (const auto& cycle : cycles()) {
    if (cycle.size() == 1) continue;
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) out << (i ? " " : "") << cycle[i] + 1;
    out << ')';
    any = true;
  }
  return any ? out.str() : "()";
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) noexcept {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  return a.lanes_.lanes <=> b.lanes_.lanes;
}

std::vector<Permutation> all_permutations(std::size_t degree) {
  std::vector<std::size_t> images(degree);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(std::span<const std::size_t>(images)));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Permutation product(std::span<const Permutation> perms, std::size_t degree) {
  Permutation acc(degree);
  for (const auto& p : perms) acc = acc * p;
  return acc;
}

}  // namespace hallmatch
