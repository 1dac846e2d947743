#pragma once

#include <gmpxx.h>

#include <string>

#include "dk/errors.hpp"

namespace dk {

// Exact arbitrary-precision rational, kept canonical (lowest terms, positive
// denominator). Beware: the two-argument mpq_class constructor does NOT
// canonicalize; build ratios through make_rational instead.
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
    if (den == 0) throw Error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q" or an integer literal. Rejects zero denominators and anything
// that is not a plain (optionally signed) decimal rational.
Rational parse_rational(const std::string& text);

// Lowest-terms "p/q"; integers print without "/1".
std::string to_string(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace dk
