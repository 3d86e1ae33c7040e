#include "ddmap/error.hpp"

namespace ddmap {

DivergenceError::DivergenceError(std::size_t index, double value)
    : Error("orbit diverged at iterate " + std::to_string(index) + " (|x| = " +
            std::to_string(value) + " exceeds 1e6 or is not finite)"),
      index_(index),
      value_(value) {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

ValidationError::ValidationError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

}  // namespace ddmap
