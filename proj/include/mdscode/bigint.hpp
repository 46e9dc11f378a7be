#pragma once

#include <gmpxx.h>

namespace mdscode {

// All counting in this library is exact. BigInt/Rational are the only
// numeric types the enumerator and bounds modules ever use; no floating
// point appears anywhere on a result path.
using BigInt = mpz_class;
using Rational = mpq_class;

/// C(n, k); zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

BigInt factorial(unsigned long n);

/// base^exp as an exact integer.
BigInt int_pow(unsigned long base, unsigned long exp);

/// num/den reduced to canonical form (gcd 1, positive denominator).
Rational make_rational(BigInt num, BigInt den);

bool is_integral(const Rational& r);

/// Exact test: does `divisor` divide `value`?
bool divides(const BigInt& divisor, const BigInt& value);

} // namespace mdscode
