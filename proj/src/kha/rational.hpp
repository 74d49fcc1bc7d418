#pragma once

#include <gmpxx.h>

#include <string>

namespace kha {

// Exact arbitrary-precision rational coefficients. All arithmetic in the
// engine is exact; no floating point anywhere.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "a" or "a/b". Throws std::invalid_argument on malformed input.
Rational rat_from_string(const std::string& text);

// Renders as "a" or "a/b".
std::string rat_to_string(const Rational& r);

}  // namespace kha
