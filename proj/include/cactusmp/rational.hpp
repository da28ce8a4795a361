#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace cactusmp {

/// Exact arbitrary-precision rational (GMP). Helpers below keep values in
/// canonical form: fully reduced, denominator > 0.
using Rational = mpq_class;

Rational rational_from(long num, long den = 1);

/// "p" when the denominator is 1, otherwise "p/q".
std::string rational_str(const Rational& q);

/// Accepts "p" or "p/q" with optional sign; rejects everything else.
Rational parse_rational(const std::string& s);

long floor_long(const Rational& q);
long ceil_long(const Rational& q);

/// Per-vertex rational weights.
using WeightFn = std::map<int, Rational>;

}  // namespace cactusmp
