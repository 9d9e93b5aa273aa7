#pragma once

#include <stdexcept>
#include <string>

namespace freecert {

/// Base class for every error thrown by the library.
///
/// Exceptions are reserved for malformed input and broken preconditions.
/// Expected negative outcomes of the mathematics (a vanishing pairing, a
/// failed word trace) are returned as structured data, never thrown.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NegativeValuation : public Error {
public:
    using Error::Error;
};

class ZeroVector : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class MembershipViolation : public Error {
public:
    using Error::Error;
};

class NotNormalized : public Error {
public:
    using Error::Error;
};

class NotReduced : public Error {
public:
    using Error::Error;
};

class UnknownRoot : public Error {
public:
    using Error::Error;
};

class InvalidCocharacter : public Error {
public:
    using Error::Error;
};

class DuplicateGamma : public Error {
public:
    using Error::Error;
};

class InvalidWitness : public Error {
public:
    using Error::Error;
};

/// A condition that is provably unreachable unless the implementation is
/// wrong (e.g. the Vandermonde bound in the base-point sweep).
class InternalError : public Error {
public:
    using Error::Error;
};

/// Parse failure with a 1-based character position into the input text.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace freecert
