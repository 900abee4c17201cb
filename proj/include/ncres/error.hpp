#pragma once

#include <stdexcept>
#include <string>

namespace ncres {

enum class ErrorCode {
    NonInvertibleJet,
    JetBudgetExceeded,
    IncompatiblePoles,
    ShapeError,
    PoleEvaluation,
    NotProper,
    DivergentIntegral,
    PoleOrderExceeded,
    Unsupported,
    BadInput,
    InsufficientJet,
    NotElliptic,
    QuadratureDegree,
    Internal,
};

inline const char* error_code_name(ErrorCode c)
{
    switch (c) {
        case ErrorCode::NonInvertibleJet: return "NonInvertibleJet";
        case ErrorCode::JetBudgetExceeded: return "JetBudgetExceeded";
        case ErrorCode::IncompatiblePoles: return "IncompatiblePoles";
        case ErrorCode::ShapeError: return "ShapeError";
        case ErrorCode::PoleEvaluation: return "PoleEvaluation";
        case ErrorCode::NotProper: return "NotProper";
        case ErrorCode::DivergentIntegral: return "DivergentIntegral";
        case ErrorCode::PoleOrderExceeded: return "PoleOrderExceeded";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::BadInput: return "BadInput";
        case ErrorCode::InsufficientJet: return "InsufficientJet";
        case ErrorCode::NotElliptic: return "NotElliptic";
        case ErrorCode::QuadratureDegree: return "QuadratureDegree";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace ncres
