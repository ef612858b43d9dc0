#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace gfs {

// Exact arithmetic ground types. All rank/determinant decisions in this
// library are exact claims, so there is no floating point anywhere in the
// core; Rat is kept canonical (lowest terms, positive denominator) by GMP.
using Int = mpz_class;
using Rat = mpq_class;

/// Builds a canonical rational, rejecting a zero denominator.
Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den = 1);

/// Parses "num" or "num/den" in decimal. Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rat rat_from_string(const std::string& text);

/// Renders as "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rat& value);

/// Exact binomial coefficient C(n, k).
Int binomial(unsigned long n, unsigned long k);

/// base^e with exact rational arithmetic; negative e inverts (base != 0).
Rat pow_rat(const Rat& base, long e);

}  // namespace gfs
