// Error types thrown across the library. Categories map onto the CLI
// exit codes: parse/validation failures are user-input problems, the
// rest signal numerical trouble in an otherwise well-formed run.
#pragma once

#include <stdexcept>
#include <string>

namespace qpdiag {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// invalid or mismatched operator/state dimensions
struct DimensionError : Error {
    using Error::Error;
};

// matrix fails Hermiticity/trace/positivity requirements for a state
struct NotAStateError : Error {
    using Error::Error;
};

// Kraus set or transfer matrix is not trace-preserving
struct NotTracePreservingError : Error {
    using Error::Error;
};

// parameter outside its admissible range
struct DomainError : Error {
    using Error::Error;
};

// eigenvalue clamping or another numerical guard failed hard
struct NumericalError : Error {
    using Error::Error;
};

// T(E_{t1,0}) cannot be inverted within the condition-number guard
struct NonInvertibleProcessError : Error {
    NonInvertibleProcessError(const std::string& what, double cond)
        : Error(what), condition_number(cond) {}
    double condition_number;
};

// a relative-entropy distance hit its support singularity inside a measure
struct SingularDistanceError : Error {
    using Error::Error;
};

// malformed input file
struct ParseError : Error {
    using Error::Error;
};

// well-formed input file with invalid content (non-CPT sample, bad grid, ...)
struct ValidationError : Error {
    using Error::Error;
};

} // namespace qpdiag
