#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "troprate/semiring.hpp"

namespace troprate {

/// Parses a non-negative numeral into a log-domain scalar.
///
/// Accepted forms: decimal literals ("0.25", "3", "1e-2"), fractions "p/q"
/// whose parts are decimal literals, and "inf" for the top sentinel. Fractions
/// are converted as log p - log q so that exact rational input does not pass
/// through a rounded quotient. Throws DomainError on malformed text.
Scalar parse_scalar(std::string_view text);

/// Ordinary value with 12 significant digits ("0.166666666667").
std::string format_decimal(Scalar s);

/// "p/q" (or "p") when the value matches a fraction with denominator at most
/// `max_den` to within a relative 1e-12; std::nullopt otherwise.
std::optional<std::string> exact_fraction(Scalar s, long long max_den = 100000);

}  // namespace troprate
