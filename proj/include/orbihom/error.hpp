#pragma once

#include <stdexcept>
#include <string>

namespace orbihom {

enum class ErrorCode {
    NonDivisibleChain,
    FaceDivisibilityViolation,
    UnknownVertex,
    InvalidSimplex,
    InvalidWeight,
    SimplexNotInComplex,
    NotDivisiblyWeighted,
    NotASubcomplex,
    CompositionNotZero,
    DimensionMismatch,
    InvalidMap,
    MorphismOnStHomology,
    InvalidSpec,
    ParseError,
};

inline const char* to_string(ErrorCode code)
{
    switch (code) {
        case ErrorCode::NonDivisibleChain:         return "NonDivisibleChain";
        case ErrorCode::FaceDivisibilityViolation: return "FaceDivisibilityViolation";
        case ErrorCode::UnknownVertex:             return "UnknownVertex";
        case ErrorCode::InvalidSimplex:            return "InvalidSimplex";
        case ErrorCode::InvalidWeight:             return "InvalidWeight";
        case ErrorCode::SimplexNotInComplex:       return "SimplexNotInComplex";
        case ErrorCode::NotDivisiblyWeighted:      return "NotDivisiblyWeighted";
        case ErrorCode::NotASubcomplex:            return "NotASubcomplex";
        case ErrorCode::CompositionNotZero:        return "CompositionNotZero";
        case ErrorCode::DimensionMismatch:         return "DimensionMismatch";
        case ErrorCode::InvalidMap:                return "InvalidMap";
        case ErrorCode::MorphismOnStHomology:      return "MorphismOnStHomology";
        case ErrorCode::InvalidSpec:               return "InvalidSpec";
        case ErrorCode::ParseError:                return "ParseError";
    }
    return "UnknownError";
}

/// Library-wide exception type carrying a machine-checkable error code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
    {
    }

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message)
{
    throw Error(code, message);
}

} // namespace orbihom
