#pragma once

#include <gmpxx.h>

#include <string>

namespace oscitab {

// Everything in the library is exact. Counts and weights overflow 64 bits
// quickly (double factorials, binomials of walk lengths), so there is no
// fixed-width fast path.
using Int = mpz_class;
using Rational = mpq_class;

/// n! as an exact integer.
Int factorial(unsigned long n);

/// n!! with the convention (-1)!! = 0!! = 1. Defined for n >= -1.
Int double_factorial(long n);

/// C(n, k); zero when k > n.
Int binomial(unsigned long n, unsigned long k);

/// num/den reduced to lowest terms with positive denominator.
/// Throws ValidationError when den is zero.
Rational make_rational(const Int& num, const Int& den);

/// base^exp for a nonnegative exponent.
Rational rational_pow(const Rational& base, unsigned long exp);

/// Accepts "num" or "num/den" in decimal, with an optional leading sign.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& value);
std::string to_string(const Int& value);

}  // namespace oscitab
