#pragma once

#include <stdexcept>
#include <string>

namespace graphscat {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- input validation ---
struct NonHermitian : Error { using Error::Error; };
struct NonRealSelfLoop : Error { using Error::Error; };
struct NonFinite : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// --- numerical kernels ---
struct ConvergenceFailure : Error { using Error::Error; };
struct SingularSolve : Error { using Error::Error; };

// --- evaluators ---
struct AtPole : Error { using Error::Error; };
struct AtTruePole : Error { using Error::Error; };
struct ZeroArgument : Error { using Error::Error; };
struct DegenerateMomentum : Error { using Error::Error; };

// --- rational form construction ---
struct DegreeMismatch : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct ConsistencyFailure : Error { using Error::Error; };

// Ambiguity flags: the integer-valued identity must never be rounded into,
// so near-boundary situations surface as errors instead of guesses.
struct BoundaryAmbiguity : Error { using Error::Error; };
struct OracleDisagreement : Error { using Error::Error; };
struct RefinementExhausted : Error { using Error::Error; };
struct NonIntegerWinding : Error { using Error::Error; };

} // namespace graphscat
