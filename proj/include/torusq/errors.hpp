#pragma once

#include <stdexcept>
#include <string>

namespace torusq {

// Precondition violations: the caller asked for something outside the
// contract (bad rank, coset mismatch, out-of-regime query, ...).
// CLI maps these to exit code 2.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal consistency failures: an invariant the library itself guarantees
// did not hold (non-exact division, violated minimum, ...).  These indicate
// a bug, never bad input.  CLI maps these to exit code 1.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

struct UnsupportedTypeError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct CosetMismatchError : PreconditionError {
    using PreconditionError::PreconditionError;
};

// Closed-form multiplicity queried below its validity window.
struct OutOfValidityWindowError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct NoTheoremAppliesError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct ShortRootBoundError : PreconditionError {
    using PreconditionError::PreconditionError;
};

// A brute-force certification found a counterexample to a claimed property.
struct PropositionViolatedError : InternalError {
    using InternalError::InternalError;
};

} // namespace torusq
