#include "hodgeorbit/error.hpp"

namespace hodgeorbit {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidRank: return "InvalidRank";
        case ErrorCode::InvalidType: return "InvalidType";
        case ErrorCode::NotARoot: return "NotARoot";
        case ErrorCode::NotStronglyOrthogonal: return "NotStronglyOrthogonal";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::NotDominant: return "NotDominant";
        case ErrorCode::DimensionCapExceeded: return "DimensionCapExceeded";
        case ErrorCode::NotMaximalParabolic: return "NotMaximalParabolic";
        case ErrorCode::NotDegreeOne: return "NotDegreeOne";
        case ErrorCode::InvalidSOS: return "InvalidSOS";
        case ErrorCode::NotFundamentalAdjoint: return "NotFundamentalAdjoint";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::CompactRoot: return "CompactRoot";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace hodgeorbit
