#include "diagmon/error.hpp"

namespace diagmon {

std::string_view error_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::Overlap: return "OverlapError";
    case ErrorCode::Coverage: return "CoverageError";
    case ErrorCode::Range: return "RangeError";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::RegularityMismatch: return "RegularityMismatch";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::NotInvolutive: return "NotInvolutive";
    case ErrorCode::Crossing: return "CrossingError";
    case ErrorCode::Parity: return "ParityError";
    case ErrorCode::UnmatchedPoint: return "UnmatchedPoint";
    case ErrorCode::WindingBound: return "WindingBound";
    case ErrorCode::RankZero: return "RankZero";
    case ErrorCode::InstanceMismatch: return "InstanceMismatch";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::BadInvolution: return "BadInvolution";
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::NotInteriorFactor: return "NotInteriorFactor";
    case ErrorCode::MissingLetter: return "MissingLetter";
    case ErrorCode::NoInvolution: return "NoInvolution";
    case ErrorCode::UnknownMonoid: return "UnknownMonoid";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::UnknownCategory: return "UnknownCategory";
    case ErrorCode::Internal: return "InternalError";
    }
    return "InternalError";
}

ErrorClass error_class(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::UnknownCategory:
    case ErrorCode::UnknownMonoid:
        return ErrorClass::Usage;
    case ErrorCode::Internal:
        return ErrorClass::Internal;
    default:
        return ErrorClass::Validation;
    }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message)
    , code_(code)
{
}

void fail(ErrorCode code, const std::string& message)
{
    throw Error(code, message);
}

} // namespace diagmon
