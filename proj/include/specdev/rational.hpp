#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace specdev {

// Exact arithmetic everywhere a verdict depends on it: averages, degree
// deviations, row sums and the certified endpoints of spectral enclosures
// are all kept as arbitrary-precision rationals or integers.
using BigInt = mpz_class;
using Rational = mpq_class;

/// Lowest-terms "p/q" rendering ("24/5", "3", "0", "-7/2").
std::string fraction_string(const Rational& q);

/// Parses "p" or "p/q" in base 10. Throws std::invalid_argument on garbage
/// or a zero denominator.
Rational parse_fraction(const std::string& text);

/// Exact rational value of a finite double (every finite double is dyadic).
Rational exact(double x);

/// Largest double <= q. Safe direction for a certified lower bound.
double double_down(const Rational& q);

/// Smallest double >= q. Safe direction for a certified upper bound.
double double_up(const Rational& q);

/// Nearest-ish double, no direction guarantee (GMP truncates toward zero).
inline double to_double(const Rational& q) { return q.get_d(); }

/// ceil(q) as a machine integer; throws if it does not fit.
long ceil_to_long(const Rational& q);

BigInt bigint_from_i128(__int128 v);

}  // namespace specdev
