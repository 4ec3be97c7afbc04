#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace moser {

// Exact scalar domain. BigInt is an arbitrary-precision integer, Rational an
// arbitrary-precision rational kept in lowest terms with positive denominator
// (GMP's canonical form).
using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned long n);

// base^exp for nonnegative integer exponents; 0^0 = 1.
BigInt int_pow(const BigInt& base, unsigned long exp);
BigInt int_pow(unsigned long base, unsigned long exp);

// C(n, k) over nonnegative integers; 0 when k > n.
BigInt binom_uu(unsigned long n, unsigned long k);

// Parses "num", "+num", "-num" or "num/den" (den > 0 after reduction).
// Throws std::invalid_argument on anything else, including "1.5" and "".
Rational parse_rational(std::string_view text);

// "num" when the value is an integer, "num/den" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

double to_double(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace moser
