#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace dtop {

/// Exact arbitrary-precision rational. All core arithmetic is exact; the
/// library contains no floating point.
using Rat = mpq_class;

/// Builds the canonical rational num/den. Throws std::invalid_argument on
/// den == 0.
Rat rat(long num, long den = 1);

/// Parses "p" or "p/q" (q > 0 after canonicalization). Throws
/// std::invalid_argument on malformed input or zero denominator.
Rat rat_parse(const std::string& text);

/// Canonical textual form: "p" when the denominator is 1, otherwise "p/q"
/// with q > 0 and gcd(p, q) = 1.
std::string rat_str(const Rat& r);

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

/// L1 norm of the difference of two equal-length coordinate vectors.
Rat l1_distance(const std::vector<Rat>& a, const std::vector<Rat>& b);

}  // namespace dtop
