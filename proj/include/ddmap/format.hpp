#pragma once

#include <string>
#include <string_view>

#include "ddmap/maps.hpp"

namespace ddmap {

/// 17 significant digits, '.' decimal point, independent of the C locale.
std::string format_double(double x);

/// Fixed-point text with `decimals` digits after the point, locale independent.
std::string format_fixed(double x, int decimals);

/// Parses a full decimal/scientific number; throws DomainError otherwise.
double parse_number(std::string_view text);

/// "a/b" or a plain number.
double parse_fraction(std::string_view text);

/// "lo:hi" where each side is a fraction or number.
Interval parse_range(std::string_view text);

}  // namespace ddmap
