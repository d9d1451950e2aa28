#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pcg {

/// Exact arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

/// Parses `p/q`, `p`, or a signed variant of either. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Formats as `p/q`, with `/1` for integers, matching the text file formats.
std::string format_rational(const Rational& value);

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace pcg
