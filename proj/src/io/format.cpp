#include "ddmap/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <string>

#include "ddmap/error.hpp"

namespace ddmap {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

std::string format_double(double x) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                   std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

std::string format_fixed(double x, int decimals) {
    std::array<char, 512> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                   std::chars_format::fixed, decimals);
    return std::string(buf.data(), res.ptr);
}

double parse_number(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
        throw DomainError("not a number: '" + std::string(text) + "'");
    }
    return value;
}

double parse_fraction(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return parse_number(text);
    }
    const double num = parse_number(text.substr(0, slash));
    const double den = parse_number(text.substr(slash + 1));
    if (den == 0.0) {
        throw DomainError("zero denominator in '" + std::string(text) + "'");
    }
    return num / den;
}

Interval parse_range(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw DomainError("range must look like lo:hi, got '" + std::string(text) + "'");
    }
    Interval r{parse_fraction(text.substr(0, colon)), parse_fraction(text.substr(colon + 1))};
    if (!(r.hi > r.lo)) {
        throw DomainError("range '" + std::string(text) + "' is empty or descending");
    }
    return r;
}

}  // namespace ddmap
