#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fvst {

// Exact rational weights end-to-end in all combinatorial code; only the LP
// solver works in floating point. GMP's mpq_class carries the arithmetic.
using Rational = mpq_class;

Rational rational(long num, long den = 1);

// Accepts integers ("7", "-3"), fractions ("3/4"), and decimals ("0.25",
// "1e-3" is NOT accepted). Throws Error(parse) on anything else.
Rational parse_rational(std::string_view text);

// Shortest exact form: "7" when the denominator is 1, else "7/3".
std::string rational_str(const Rational& r);

}  // namespace fvst
