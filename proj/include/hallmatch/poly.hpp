#pragma once

// Dense univariate polynomials over the integers.
//
// Coefficients are stored in ascending degree: coeffs()[i] multiplies x^i.
// The representation is always normalized: the last stored coefficient is
// nonzero, and the zero polynomial is the empty sequence. Every operation is
// exact; the two division routines throw instead of rounding.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hallmatch/bigint.hpp"

namespace hallmatch {

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<long> coeffs);
  explicit Polynomial(std::vector<BigInt> coeffs);

  static Polynomial constant(const BigInt& c);
  static Polynomial x();
  static Polynomial monomial(const BigInt& c, std::size_t degree);

  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  // nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept;

  // Coefficient of x^i; zero past the degree.
  BigInt coeff(std::size_t i) const;
  const BigInt& leading() const;

  BigInt evaluate(const BigInt& at) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const BigInt& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const BigInt& rhs) { return lhs *= rhs; }
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial pow(const Polynomial& p, unsigned exponent);

/// p(q(x)), by Horner accumulation over the coefficients of p.
Polynomial compose(const Polynomial& p, const Polynomial& q);

/// The exact quotient r with q * r == p. Throws kDivisionByZero for q == 0 and
/// kNotDivisible when long division leaves a remainder or a fractional
/// quotient coefficient.
Polynomial div_exact(const Polynomial& p, const Polynomial& q);

/// Coefficient-wise division by a positive integer; kNotDivisible unless
/// every coefficient is a multiple of k.
Polynomial scale_div(const Polynomial& p, const BigInt& k);

/// x -> p(c x): coefficient i is multiplied by c^i.
Polynomial dilate(const Polynomial& p, const BigInt& c);

Polynomial derivative(const Polynomial& p);

BigInt content(const Polynomial& p);

/// p divided by its content, with a positive leading coefficient.
Polynomial primitive_part(const Polynomial& p);

/// Remainder of lc(b)^(deg a - deg b + 1) * a modulo b, computed in Z[x].
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b);

/// Primitive gcd over Q[x], normalized to positive leading coefficient.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// p / gcd(p, p'), made primitive. Throws kZeroPolynomial for p == 0.
Polynomial square_free_part(const Polynomial& p);

/// Number of distinct real roots of p, by a Sturm sequence on the square-free
/// part. Throws kZeroPolynomial for p == 0.
std::size_t sturm_real_root_count(const Polynomial& p);

Polynomial chebyshev_T(unsigned n);
Polynomial chebyshev_U(unsigned n);

/// Human-readable form such as "x^4 - 4x^2 + 2".
std::string to_string(const Polynomial& p);

}  // namespace hallmatch
