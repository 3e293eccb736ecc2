#pragma once

#include <gmpxx.h>

#include <span>
#include <string>

namespace qlie {

// Exact rationals, always canonicalized (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

// binom(n, k) with the convention that out-of-range arguments give 0.
Integer binom(long n, long k);

// n! / (p_1! ... p_r!) for p_i >= 0 summing to n; 0 if any part is negative
// or the parts do not sum to n.
Integer multinom(long n, std::span<const long> parts);

// "a/b", the "/b" omitted for integers.
std::string to_string(const Rational& r);

}  // namespace qlie
