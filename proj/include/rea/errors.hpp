// Error types shared by all modules.
#pragma once

#include <stdexcept>
#include <string>

namespace rea {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the documented domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Exact and numeric scalars were combined without an explicit conversion.
struct ModeMismatch : Error {
    using Error::Error;
};

// Exact inverse requested for a Laurent polynomial that is not a monomial.
struct NonInvertible : Error {
    using Error::Error;
};

// Polynomial handed to a rewriting system of a different algebra.
struct AlgebraMismatch : Error {
    using Error::Error;
};

// Rewriting exceeded its step budget; indicates a broken rule set.
struct NonterminationGuard : Error {
    using Error::Error;
};

// A Gelfand-Tsetlin norm came out negative in unitary mode.
struct NegativeNorm : Error {
    using Error::Error;
};

// Truncation degree too small for the requested interior margin.
struct TruncationTooSmall : Error {
    using Error::Error;
};

// Central elements do not act by scalars on the checked subspace.
struct NotFactorial : Error {
    using Error::Error;
};

// Root multiset is not a spectral weight.
struct NotAdmissible : Error {
    using Error::Error;
};

// Root signs incompatible with the requested sign vector.
struct SignMismatch : Error {
    using Error::Error;
};

// Supplied corepresentation is not unitary on the interior.
struct BadCorep : Error {
    using Error::Error;
};

// Text could not be parsed.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace rea
