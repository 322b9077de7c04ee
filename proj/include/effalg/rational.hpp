#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace effalg {

/// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

/// Parses `p`, `p/q` or `-p/q`; throws std::invalid_argument on malformed
/// text or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

}  // namespace effalg
