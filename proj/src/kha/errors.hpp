#pragma once

#include <stdexcept>
#include <string>

namespace kha {

// Base class for all engine errors. Subclasses mirror the error conditions
// of the individual operations so callers (and the CLI) can report them
// with their domain name.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct SyntaxError : Error {
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

struct UnknownSymbol : Error {
    using Error::Error;
};

struct NonBinomialDenominator : Error {
    using Error::Error;
};

struct DenominatorVanishes : Error {
    using Error::Error;
};

struct NonExpandableFactor : Error {
    using Error::Error;
};

struct PoleAtPEqualsQ : Error {
    using Error::Error;
};

struct NotSymmetric : Error {
    using Error::Error;
};

struct PotentialNotInvariant : Error {
    using Error::Error;
};

struct DegenerateWeight : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NonPolynomialProduct : Error {
    using Error::Error;
};

struct TruncationExceeded : Error {
    using Error::Error;
};

struct PoleOnContour : Error {
    using Error::Error;
};

struct AmbiguousPoleOrder : Error {
    using Error::Error;
};

}  // namespace kha
