// Error reporting shared by every module.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace diagmon {

enum class ErrorCode {
    // partitions
    Overlap,
    Coverage,
    Range,
    ShapeMismatch,
    BoundExceeded,
    // cobordisms
    RegularityMismatch,
    NotRegular,
    NotIdempotent,
    NotIrreducible,
    BaseMismatch,
    // annular
    NotInvolutive,
    Crossing,
    Parity,
    UnmatchedPoint,
    WindingBound,
    RankZero,
    // auxiliary monoids
    InstanceMismatch,
    NotAssociative,
    NotClosed,
    BadInvolution,
    // identities
    EmptyWord,
    NotInteriorFactor,
    MissingLetter,
    NoInvolution,
    UnknownMonoid,
    // io
    Parse,
    UnknownCategory,
    Internal,
};

std::string_view error_name(ErrorCode code) noexcept;

// Broad classes used by the C API and the CLI exit codes.
enum class ErrorClass { Usage, Validation, Internal };
ErrorClass error_class(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

inline void require(bool condition, ErrorCode code, const std::string& message)
{
    if (!condition) {
        fail(code, message);
    }
}

} // namespace diagmon
