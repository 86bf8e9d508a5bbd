#pragma once

#include <stdexcept>
#include <string>

namespace plankcover {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument values (zero directions, mismatched dimensions of inputs, ...).
struct ArgumentError : Error {
    using Error::Error;
};

// A required representation (H-rep / V-rep) is missing or inconsistent.
struct RepresentationError : Error {
    using Error::Error;
};

// Operation not available in this ambient dimension.
struct DimensionError : Error {
    using Error::Error;
};

// Problem size exceeds the design envelope.
struct CapacityError : Error {
    using Error::Error;
};

// Numerically singular basis or vanishing certificate.
struct DegeneracyError : Error {
    using Error::Error;
};

// Objective can be improved without bound.
struct UnboundedError : Error {
    using Error::Error;
};

// A stated hypothesis of the invoked result does not hold for this input.
struct PreconditionError : Error {
    using Error::Error;
};

// The invoked result makes no claim for this input (e.g. total inradius >= 1);
// carries a machine-readable reason code for the CLI.
struct RefusalError : Error {
    RefusalError(std::string code, const std::string& message)
        : Error(message), reason_code(std::move(code)) {}
    std::string reason_code;
};

// An internally computed certificate failed its own audit. Always a bug.
struct AuditError : Error {
    using Error::Error;
};

}  // namespace plankcover
