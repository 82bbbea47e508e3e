#include "speclab/error.hpp"

namespace speclab {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::PatternTooLarge: return "PatternTooLarge";
    case ErrorCode::OverlappingSets: return "OverlappingSets";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
{
}

}  // namespace speclab
