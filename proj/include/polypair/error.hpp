#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polypair {

enum class ErrorCode {
    SyntaxError,
    ValidationError,
    NotGraded,
    NotLattice,
    NotDiamond,
    UnknownSeed,
    InvalidDimension,
    TooLarge,
    UnknownFacet,
    DisconnectedBeyondSet,
    BadBoundary,
    NotSimpleVertex,
    NotBipyramid,
    NoSimpleApex,
    InvalidCut,
    SimplicityViolation,
    DimensionMismatch,
    DegenerateDenominator,
    DegenerateInput,
    PlanFailure,
    StepPreconditionFailure,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace polypair
