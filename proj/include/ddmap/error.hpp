#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ddmap {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument falls outside the domain of the operation (negative energy,
/// C <= 0, r outside (0, 4], empty interval, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// sin(pi * omega) vanishes, so the kick strength is undefined.
class ResonanceError : public Error {
public:
    using Error::Error;
};

/// A closed form would leave the representable double range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// An orbit left the bounded region |x| <= 1e6 or became non-finite.
class DivergenceError : public Error {
public:
    DivergenceError(std::size_t index, double value);

    std::size_t index() const noexcept { return index_; }
    double value() const noexcept { return value_; }

private:
    std::size_t index_;
    double value_;
};

/// The retained window is too short for the requested period search.
class WindowTooShortError : public Error {
public:
    using Error::Error;
};

/// Malformed input text; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Well-formed input that violates a record invariant.
class ValidationError : public Error {
public:
    ValidationError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Least-squares system without enough distinct abscissae.
class RankDeficiencyError : public Error {
public:
    using Error::Error;
};

}  // namespace ddmap
