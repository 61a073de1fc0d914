#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skewring {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands live in different rings or contexts.
class MismatchError : public Error {
public:
    using Error::Error;
};

// Operation is not defined for the given ring, map or value
// (zero inverse, non-division ring, missing inverse, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed configuration record.
class ConfigError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at offset " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace skewring
