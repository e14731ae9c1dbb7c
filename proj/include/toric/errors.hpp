#pragma once

#include <stdexcept>

namespace toric {

// Base class for every classified error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Field construction
struct NotPrime : Error { using Error::Error; };
struct NotPrimitive : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };

// Element arithmetic
struct DivisionByZero : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };

// Exponent sets and codes
struct ExponentCollision : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct NotFullTorus : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct DistanceUnavailable : Error { using Error::Error; };

// Decoder
struct MismatchedCodes : Error { using Error::Error; };
struct NoNonzeroLocator : Error { using Error::Error; };
struct RecoveryInconsistent : Error { using Error::Error; };
struct RecoveryAmbiguous : Error { using Error::Error; };

// CLI / config files
struct ConfigError : Error { using Error::Error; };

}  // namespace toric
