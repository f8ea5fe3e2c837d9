#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wronski {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p", or "-p/q". Throws DomainError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without the denominator.
std::string format_rational(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

Integer factorial(unsigned n);
Integer binomial(long n, long k);
/// (x)_k = x(x-1)...(x-k+1)
Integer falling_factorial(long x, unsigned k);

Rational rational_pow(const Rational& base, unsigned exponent);

}  // namespace wronski
