#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hh {

/// Expression could not be parsed. `offset` is the byte position in the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// A function was evaluated outside its domain (log of a nonpositive value,
/// division by zero, fractional power of a negative base, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computation produced a non-finite value or failed to converge.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hh
