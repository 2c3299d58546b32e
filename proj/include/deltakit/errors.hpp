#pragma once

#include <stdexcept>
#include <string>

namespace deltakit {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroInverse : Error { using Error::Error; };
struct NotSquare : Error { using Error::Error; };
struct Singular : Error { using Error::Error; };
struct SingularPivotBlock : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct LabelMismatch : Error { using Error::Error; };
struct OverlappingSets : Error { using Error::Error; };
struct EmptyDeltaMatroid : Error { using Error::Error; };
struct InfeasibleMinor : Error { using Error::Error; };
struct FieldTooSmall : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };
struct EmptySlice : Error { using Error::Error; };
struct InfeasibleTarget : Error { using Error::Error; };
struct RandomizationFailure : Error { using Error::Error; };
struct SingularInput : Error { using Error::Error; };
struct MixedCardinality : Error { using Error::Error; };
struct MalformedDecomposition : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };

} // namespace deltakit
