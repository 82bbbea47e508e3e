#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace speclab {

enum class ErrorCode {
    NotAnEdge,
    IndexOutOfRange,
    SizeLimitExceeded,
    MalformedGraph6,
    InvalidSpec,
    ConvergenceFailure,
    EmptyGraph,
    UnsupportedFamily,
    Disconnected,
    PatternTooLarge,
    OverlappingSets,
    PreconditionFailed,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every recoverable failure in the library is reported as an Error carrying
/// one of the codes above; callers switch on code() rather than on the text.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace speclab
