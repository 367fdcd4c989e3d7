#pragma once

#include <gmpxx.h>

#include <optional>

namespace pp {

// Exact arithmetic backends. Rational values are kept canonical (lowest
// terms, positive denominator) by construction; gmp arithmetic preserves
// canonical form as long as inputs are canonical.
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const BigInt& num, const BigInt& den);

bool is_integer(const Rational& r);

// Throws std::domain_error if r is not an integer.
BigInt to_integer(const Rational& r);

// Exact square root when r is the square of a rational, nullopt otherwise.
std::optional<Rational> rational_sqrt(const Rational& r);

bool is_canonical(const Rational& r);

}  // namespace pp
