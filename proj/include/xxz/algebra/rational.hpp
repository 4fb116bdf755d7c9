#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace xxz {

using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const BigInt& num, const BigInt& den);

// "a/b", or "a" when the denominator is one.
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

BigInt factorial(long n);
// Zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

Rational pow(const Rational& base, long e);

}  // namespace xxz
