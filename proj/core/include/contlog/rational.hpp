#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace contlog {

// Parses "p/q", an integer, or a decimal literal such as "0.125", "-.5" or
// "2.5e-3" into an exact rational.  Decimal literals are never routed
// through binary floating point.  Throws InvalidInput on malformed text.
mpq_class parse_rational(std::string_view text);

// Canonical "p/q" (or "p" when the denominator is 1).
std::string format_rational(const mpq_class& q);

}  // namespace contlog
