#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cohomotopy {

enum class ErrorCode {
    ParseError,
    NotConnected,
    DegreeOutOfRange,
    CompositionNonzero,
    RelationViolation,
    MixedComplexes,
    BadIndex,
    WrongCoefficients,
    LiftFailure,
    IncompatibleCoefficients,
    UnsupportedOperation,
    HypothesisFailure,
    TooLarge,
    RangeTooLarge,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` identifies the failure class.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }
    /// The message without the code prefix.
    const std::string& message() const noexcept { return message_; }

private:
    ErrorCode code_;
    std::string message_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

} // namespace cohomotopy
