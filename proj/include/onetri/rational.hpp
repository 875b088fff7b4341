#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace onetri {

/// Exact arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

/// Parses `p/q` (q > 0) or a decimal literal such as `-0.25` or `1.5e-3`.
/// Decimals are converted exactly: `0.1` becomes 1/10. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical text form: `p` for integers, `p/q` otherwise.
std::string to_string(const Rational& value);

/// Nearest double, ties to even (mpq's own conversion truncates).
double to_double(const Rational& value);

/// Rational square root when it exists (numerator and denominator are perfect squares).
std::optional<Rational> exact_sqrt(const Rational& value);

}  // namespace onetri
