#pragma once

#include <stdexcept>
#include <string>

namespace qsearch {

// Invalid or out-of-domain input (bad beta, size not a power of two, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Closed-form axis formula evaluated at a singular point; the message names
// the vanishing factor.
struct SingularAxisError : std::domain_error {
    using std::domain_error::domain_error;
};

// An algebraic identity failed beyond tolerance (arccos argument excursion,
// cross-model deviation past threshold, non-unitary / non-orthogonal input).
struct ConsistencyError : std::domain_error {
    using std::domain_error::domain_error;
};

// Full-dimensional state left the two-dimensional invariant subspace.
struct LeakageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rotation is too close to the identity for circle geometry to make sense.
struct NoMotionError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace qsearch
