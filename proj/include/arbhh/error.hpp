#ifndef ARBHH_ERROR_HPP
#define ARBHH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace arbhh {

enum class ErrorCode {
    Parse,
    InvalidField,
    ComplexInvalid,
    BasisInfiniteWithoutBound,
    NotATree,
    TruncationTooSmall,
    TruncationMismatch,
    ModeMismatch,
    UnassignedLegRole,
    ResolutionNotFinite,
    DegreesUnsupported,
    Noncompact,
    Disconnected,
    InvariantViolation,
    Internal,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::Parse: return "PARSE_ERROR";
        case ErrorCode::InvalidField: return "INVALID_FIELD";
        case ErrorCode::ComplexInvalid: return "COMPLEX_INVALID";
        case ErrorCode::BasisInfiniteWithoutBound: return "BASIS_INFINITE_WITHOUT_BOUND";
        case ErrorCode::NotATree: return "NOT_A_TREE";
        case ErrorCode::TruncationTooSmall: return "TRUNCATION_TOO_SMALL";
        case ErrorCode::TruncationMismatch: return "TRUNCATION_MISMATCH";
        case ErrorCode::ModeMismatch: return "MODE_MISMATCH";
        case ErrorCode::UnassignedLegRole: return "UNASSIGNED_LEG_ROLE";
        case ErrorCode::ResolutionNotFinite: return "RESOLUTION_NOT_FINITE";
        case ErrorCode::DegreesUnsupported: return "DEGREES_UNSUPPORTED";
        case ErrorCode::Noncompact: return "NONCOMPACT";
        case ErrorCode::Disconnected: return "DISCONNECTED";
        case ErrorCode::InvariantViolation: return "INVARIANT_VIOLATION";
        case ErrorCode::Internal: return "INTERNAL";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace arbhh

#endif
