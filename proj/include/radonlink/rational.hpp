#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace radonlink {

/// Exact rational number. mpq_class keeps every value canonical: the
/// denominator is positive and coprime to the numerator.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }

/// Parse "p", "p/q" or a plain decimal such as "-12.375". Scientific
/// notation, empty strings, zero denominators and signed denominators are
/// rejected with ParseError.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

}  // namespace radonlink
