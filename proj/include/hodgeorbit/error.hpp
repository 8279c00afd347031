#pragma once

#include <stdexcept>
#include <string>

namespace hodgeorbit {

enum class ErrorCode {
    InvalidRank,
    InvalidType,
    NotARoot,
    NotStronglyOrthogonal,
    IndexOutOfRange,
    NotDominant,
    DimensionCapExceeded,
    NotMaximalParabolic,
    NotDegreeOne,
    InvalidSOS,
    NotFundamentalAdjoint,
    LengthMismatch,
    CompactRoot,
    Internal,
};

const char* error_code_name(ErrorCode code);

// Raised for invalid mathematical input. The CLI maps these to exit code 3.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace hodgeorbit
