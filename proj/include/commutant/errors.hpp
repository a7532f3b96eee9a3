#pragma once

#include <stdexcept>

namespace commutant {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAUnit : Error { using Error::Error; };
struct NonSquare : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct RingMismatch : Error { using Error::Error; };
struct NotMonic : Error { using Error::Error; };
struct NotAField : Error { using Error::Error; };
struct SizeTooSmall : Error { using Error::Error; };
struct ScalarInput : Error { using Error::Error; };
struct SearchExhausted : Error { using Error::Error; };
struct TraceNonZero : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };
struct NotSaturated : Error { using Error::Error; };
struct CharacteristicMismatch : Error { using Error::Error; };
struct NotRegularModP : Error { using Error::Error; };
struct PrecisionExhausted : Error { using Error::Error; };
struct UnsupportedPrime : Error { using Error::Error; };
struct BadTrace : Error { using Error::Error; };
struct SingularSeed : Error { using Error::Error; };
struct DivisionFailure : Error { using Error::Error; };
struct InternalInvariantViolation : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace commutant
