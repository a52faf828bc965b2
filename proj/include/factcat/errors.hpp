#pragma once

#include <stdexcept>
#include <string>

namespace factcat {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An element, tuple or morphism does not satisfy its invariants.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// The operation needs a capability (e.g. divisibility order) the monoid lacks.
class CapabilityError : public Error {
public:
    using Error::Error;
};

/// An input exceeds a documented numeric bound (primality bound, int64 overflow).
class RangeError : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed its resource guard.
class GuardError : public Error {
public:
    using Error::Error;
};

/// Malformed wire encoding.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A result that the theory guarantees failed its runtime re-check.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace factcat
