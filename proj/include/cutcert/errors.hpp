/**
 * Error types shared across the library.
 */

#ifndef CUTCERT_ERRORS_HPP
#define CUTCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cutcert {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// complex construction
struct EmptyComplexError : Error { using Error::Error; };
struct MixedDimensionError : Error { using Error::Error; };
struct DegenerateSimplexError : Error { using Error::Error; };
struct ScParseError : Error { using Error::Error; };

// homology
struct BadDegreeError : Error { using Error::Error; };
struct NotACocycleError : Error { using Error::Error; };
struct NotACycleError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };

// circle map
struct CannotSeparateError : Error { using Error::Error; };
struct NoWrapFixpointError : Error { using Error::Error; };
struct DisconnectedSideError : Error { using Error::Error; };
struct CoboundaryContradictionError : Error { using Error::Error; };

// witness construction
struct TrivialClassError : Error { using Error::Error; };
struct EmptySurfaceError : Error { using Error::Error; };
struct PreconditionViolatedError : Error { using Error::Error; };
struct SearchExhaustedError : Error { using Error::Error; };

// generators / cli
struct BadSpecError : Error { using Error::Error; };

}  // namespace cutcert

#endif  // CUTCERT_ERRORS_HPP
