#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace logsurf {

enum class ErrorKind {
    SingularMatrix,
    NonSquare,
    NonSymmetric,
    DimensionMismatch,
    NotStrictlyConvex,
    InvalidChain,
    NotNegativeDefinite,
    Disconnected,
    UnclassifiableShape,
    UnknownLabel,
    PairNotIncident,
    NotContractible,
    NegativeCoefficient,
    NoEffectiveRepresentative,
    NegativeIntersection,
    EmptyInterval,
    NotHomogeneous,
    AllZero,
    ParseError,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// callers (and the CLI exit-code contract) can dispatch without string
/// matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace logsurf
