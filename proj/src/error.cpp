#include "cohomotopy/error.hpp"

namespace cohomotopy {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::CompositionNonzero: return "CompositionNonzero";
    case ErrorCode::RelationViolation: return "RelationViolation";
    case ErrorCode::MixedComplexes: return "MixedComplexes";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::WrongCoefficients: return "WrongCoefficients";
    case ErrorCode::LiftFailure: return "LiftFailure";
    case ErrorCode::IncompatibleCoefficients: return "IncompatibleCoefficients";
    case ErrorCode::UnsupportedOperation: return "UnsupportedOperation";
    case ErrorCode::HypothesisFailure: return "HypothesisFailure";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::RangeTooLarge: return "RangeTooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message) {}

void raise(ErrorCode code, const std::string& message) { throw Error(code, message); }

} // namespace cohomotopy
