#pragma once

#include <stdexcept>
#include <string>

namespace zinbiel {

enum class ErrorCode {
    DivisionByZero,
    MissingParameter,
    PoleAtAssignment,
    SyntaxError,
    UnknownParameter,
    DimensionMismatch,
    NotNilpotentWithinBound,
    IncompleteWitness,
    InvalidWitness,
    UnknownKey,
    DimensionOutOfRange,
    IllFormedEntry,
    SingularMap,
};

/// Library-wide exception; `code()` identifies the failure class.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MissingParameter: return "MissingParameter";
    case ErrorCode::PoleAtAssignment: return "PoleAtAssignment";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownParameter: return "UnknownParameter";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotNilpotentWithinBound: return "NotNilpotentWithinBound";
    case ErrorCode::IncompleteWitness: return "IncompleteWitness";
    case ErrorCode::InvalidWitness: return "InvalidWitness";
    case ErrorCode::UnknownKey: return "UnknownKey";
    case ErrorCode::DimensionOutOfRange: return "DimensionOutOfRange";
    case ErrorCode::IllFormedEntry: return "IllFormedEntry";
    case ErrorCode::SingularMap: return "SingularMap";
    }
    return "Unknown";
}

} // namespace zinbiel
