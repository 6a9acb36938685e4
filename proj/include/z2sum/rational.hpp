#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace z2sum {

using Rational = mpq_class;
using Integer = mpz_class;

/// Accepts "p/q" or a bare integer (optionally signed). Decimals are rejected
/// so nothing is silently rounded.
Rational parse_rational(std::string_view text);

/// Lowest terms; integers print without a denominator ("2", "7/4").
std::string to_string(const Rational& r);
/// Lowest terms, always with a denominator ("2/1").
std::string to_fraction(const Rational& r);
double to_double(const Rational& r);

Integer binomial(long n, long k);
Integer pow2(unsigned long k);
Rational ceil_of(const Rational& r);
Integer ceil_integer(const Rational& r);

}  // namespace z2sum
