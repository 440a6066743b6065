#include "polypair/error.hpp"

namespace polypair {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::NotGraded: return "NotGraded";
    case ErrorCode::NotLattice: return "NotLattice";
    case ErrorCode::NotDiamond: return "NotDiamond";
    case ErrorCode::UnknownSeed: return "UnknownSeed";
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnknownFacet: return "UnknownFacet";
    case ErrorCode::DisconnectedBeyondSet: return "DisconnectedBeyondSet";
    case ErrorCode::BadBoundary: return "BadBoundary";
    case ErrorCode::NotSimpleVertex: return "NotSimpleVertex";
    case ErrorCode::NotBipyramid: return "NotBipyramid";
    case ErrorCode::NoSimpleApex: return "NoSimpleApex";
    case ErrorCode::InvalidCut: return "InvalidCut";
    case ErrorCode::SimplicityViolation: return "SimplicityViolation";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::PlanFailure: return "PlanFailure";
    case ErrorCode::StepPreconditionFailure: return "StepPreconditionFailure";
    }
    return "Unknown";
}

} // namespace polypair
