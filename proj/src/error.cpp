#include "tetdual/error.hpp"

namespace tetdual {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::DuplicateTet: return "DuplicateTet";
    case ErrorCode::DegenerateTet: return "DegenerateTet";
    case ErrorCode::UnknownSimplex: return "UnknownSimplex";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotValidated: return "NotValidated";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorCode::SingularPairing: return "SingularPairing";
    case ErrorCode::NotAPath: return "NotAPath";
    case ErrorCode::RankGuardExceeded: return "RankGuardExceeded";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace tetdual
