#include "hallmatch/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "hallmatch/errors.hpp"

namespace hallmatch {

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::constant(const BigInt& c) { return Polynomial(std::vector<BigInt>{c}); }

Polynomial Polynomial::x() { return Polynomial{0, 1}; }

Polynomial Polynomial::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> coeffs(degree + 1);
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

std::optional<std::size_t> Polynomial::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

BigInt Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

const BigInt& Polynomial::leading() const {
  if (coeffs_.empty()) throw Error(Errc::kZeroPolynomial, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

BigInt Polynomial::evaluate(const BigInt& at) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    }
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial::constant(1);
  Polynomial base = p;
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

Polynomial compose(const Polynomial& p, const Polynomial& q) {
  Polynomial acc;
  auto coeffs = p.coeffs();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * q + Polynomial::constant(*it);
  }
  return acc;
}

Polynomial div_exact(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw Error(Errc::kDivisionByZero, "division by the zero polynomial");
  if (p.is_zero()) return {};
  const std::size_t dp = *p.degree();
  const std::size_t dq = *q.degree();
  if (dp < dq) throw Error(Errc::kNotDivisible, "divisor degree exceeds dividend degree");

  std::vector<BigInt> rem(p.coeffs().begin(), p.coeffs().end());
  std::vector<BigInt> quot(dp - dq + 1);
  const BigInt& lead = q.leading();
  auto qc = q.coeffs();
  for (std::size_t step = dp - dq + 1; step-- > 0;) {
    BigInt& top = rem[step + dq];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw Error(Errc::kNotDivisible, "quotient coefficient is not an integer");
    }
    BigInt factor;
    mpz_divexact(factor.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= dq; ++j) {
      mpz_submul(rem[step + j].get_mpz_t(), factor.get_mpz_t(), qc[j].get_mpz_t());
    }
    quot[step] = std::move(factor);
  }
  for (const auto& c : rem) {
    if (c != 0) throw Error(Errc::kNotDivisible, "nonzero remainder");
  }
  return Polynomial(std::move(quot));
}

Polynomial scale_div(const Polynomial& p, const BigInt& k) {
  if (k <= 0) throw Error(Errc::kInvalidArgument, "scale_div needs a positive divisor");
  std::vector<BigInt> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& c : out) {
    if (!mpz_divisible_p(c.get_mpz_t(), k.get_mpz_t())) {
      throw Error(Errc::kNotDivisible, "coefficient " + to_decimal(c) + " is not a multiple of " + to_decimal(k));
    }
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
  }
  return Polynomial(std::move(out));
}

Polynomial dilate(const Polynomial& p, const BigInt& c) {
  std::vector<BigInt> out(p.coeffs().begin(), p.coeffs().end());
  BigInt scale = 1;
  for (auto& coeff : out) {
    coeff *= scale;
    scale *= c;
  }
  return Polynomial(std::move(out));
}

Polynomial derivative(const Polynomial& p) {
  auto c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<BigInt> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * static_cast<unsigned long>(i);
  return Polynomial(std::move(out));
}

BigInt content(const Polynomial& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return {};
  BigInt g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<BigInt> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return Polynomial(std::move(out));
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(Errc::kDivisionByZero, "pseudo-remainder by the zero polynomial");
  if (a.is_zero()) return {};
  const std::size_t db = *b.degree();
  if (*a.degree() < db) return a;
  const unsigned delta = static_cast<unsigned>(*a.degree() - db + 1);
  const BigInt& lead = b.leading();

  Polynomial r = a;
  unsigned steps = 0;
  while (!r.is_zero() && *r.degree() >= db) {
    Polynomial term = Polynomial::monomial(r.leading(), *r.degree() - db) * b;
    r *= lead;
    r -= term;
    ++steps;
  }
  if (steps < delta) r *= power(lead, delta - steps);
  return r;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial u = primitive_part(a);
  Polynomial v = primitive_part(b);
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  if (*u.degree() < *v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    Polynomial r = pseudo_remainder(u, v);
    u = std::move(v);
    v = primitive_part(r);
  }
  return primitive_part(u);
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.is_zero()) throw Error(Errc::kZeroPolynomial, "square-free part of the zero polynomial");
  if (*p.degree() == 0) return Polynomial::constant(1);
  Polynomial g = gcd(p, derivative(p));
  return primitive_part(div_exact(primitive_part(p), g));
}

namespace {

int sign_of(const BigInt& v) { return sgn(v); }

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t sturm_real_root_count(const Polynomial& p) {
  if (p.is_zero()) throw Error(Errc::kZeroPolynomial, "Sturm sequence of the zero polynomial");
  Polynomial s = square_free_part(p);
  if (*s.degree() == 0) return 0;

  std::vector<Polynomial> chain;
  chain.push_back(s);
  chain.push_back(primitive_part(derivative(s)));
  while (true) {
    const Polynomial& a = chain[chain.size() - 2];
    const Polynomial& b = chain.back();
    Polynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem uses lc(b)^delta; undo a negative factor so r stays a positive
    // multiple of the true remainder, then negate for the Sturm step.
    const unsigned delta = static_cast<unsigned>(*a.degree() - *b.degree() + 1);
    if (b.leading() < 0 && (delta % 2 == 1)) r = -r;
    r = -r;
    BigInt g = content(r);
    std::vector<BigInt> reduced(r.coeffs().begin(), r.coeffs().end());
    for (auto& c : reduced) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    chain.emplace_back(std::move(reduced));
  }

  std::vector<int> at_pos_inf;
  std::vector<int> at_neg_inf;
  for (const auto& q : chain) {
    const int lead = sign_of(q.leading());
    at_pos_inf.push_back(lead);
    at_neg_inf.push_back((*q.degree() % 2 == 0) ? lead : -lead);
  }
  return sign_changes(at_neg_inf) - sign_changes(at_pos_inf);
}

Polynomial chebyshev_T(unsigned n) {
  Polynomial prev = Polynomial::constant(1);
  if (n == 0) return prev;
  Polynomial cur = Polynomial::x();
  const Polynomial two_x{0, 2};
  for (unsigned i = 1; i < n; ++i) {
    Polynomial next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Polynomial chebyshev_U(unsigned n) {
  Polynomial prev = Polynomial::constant(1);
  if (n == 0) return prev;
  Polynomial cur{0, 2};
  const Polynomial two_x{0, 2};
  for (unsigned i = 1; i < n; ++i) {
    Polynomial next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  auto c = p.coeffs();
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    BigInt mag = abs(c[i]);
    if (first) {
      if (c[i] < 0) out << '-';
    } else {
      out << (c[i] < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i >= 1) out << 'x';
    if (i >= 2) out << '^' << i;
    first = false;
  }
  return out.str();
}

}  // namespace hallmatch
