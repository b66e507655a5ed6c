#pragma once

// Typed error hierarchy. Every failure mode callers are expected to detect
// (non-invertible scalars, mismatched rings/carriers, basis overflow, parse
// positions) gets its own type; everything derives from ftczin::Error.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ftczin {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDenominatorError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

// Carries the canonical text of the offending element.
struct NotInvertibleError : Error {
    std::string element;
    NotInvertibleError(const std::string& msg, std::string elem)
        : Error(msg), element(std::move(elem)) {}
};

struct RingMismatchError : Error {
    using Error::Error;
};

struct DescriptorMismatchError : Error {
    using Error::Error;
};

// A structure-constant product escaped the presented basis.
struct BasisOverflowError : Error {
    using Error::Error;
};

struct DegreeBoundError : Error {
    using Error::Error;
};

// Restriction of an algebra morphism left the target kernel.
struct RestrictionError : Error {
    std::string witness;
    RestrictionError(const std::string& msg, std::string w)
        : Error(msg), witness(std::move(w)) {}
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct UsageError : Error {
    using Error::Error;
};

}  // namespace ftczin
