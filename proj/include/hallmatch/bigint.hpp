#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hallmatch {

using BigInt = mpz_class;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt power(const BigInt& base, unsigned exponent);

std::string to_decimal(const BigInt& value);

// Throws Error(kParseError) unless text is an optionally signed decimal integer.
BigInt parse_decimal(std::string_view text);

}  // namespace hallmatch
