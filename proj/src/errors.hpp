#pragma once

#include <stdexcept>

namespace asx {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input: rational syntax, series text, sequence files.
struct ParseError : Error {
    using Error::Error;
};

// A coefficient stream violates the normalization required by its kind.
struct NormalizationError : Error {
    using Error::Error;
};

// The sequence cannot support the requested operation (typically a
// numeric check on an expansion-only entry with no exact evaluator).
struct CapabilityError : Error {
    using Error::Error;
};

// A measured quantity fell below the floor of the working precision.
struct PrecisionError : Error {
    using Error::Error;
};

// The measured quantity is identically zero; no order can be assigned.
struct DegenerateError : Error {
    using Error::Error;
};

// Invalid mathematical arguments: division by zero, index out of range.
struct DomainError : Error {
    using Error::Error;
};

} // namespace asx
