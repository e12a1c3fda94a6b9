#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace redkron {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands of a product or coefficient live in different symmetric groups.
class SizeMismatch : public Error {
public:
    using Error::Error;
};

/// A requested level exceeds the configured ceiling.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Checked integer arithmetic overflowed, or an exact quotient was not integral.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position))
        , position_(position)
    {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace redkron
