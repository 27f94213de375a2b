#pragma once

#include <stdexcept>
#include <string>

namespace projineq {

/// Base class for every precondition failure raised by the library.
class Error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operands live in spaces of different dimension (or on different outcome grids).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A direction vector z with zero norm was supplied where a unit direction is required.
class ZeroDirectionError : public Error {
public:
    using Error::Error;
};

/// A value lies outside the operation's domain (non-finite coordinate, p < 1, bad weights...).
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace projineq
