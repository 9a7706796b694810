#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace besselbound {

enum class ErrorKind {
    InvalidInput,
    DomainError,
    OrderOutOfRange,
    NonConvergence,
    Overflow,
    NearPole,
    BracketFailure,
    NoRootInInterval,
    HypothesisViolated,
    DimensionError,
    DenominatorNonpositive,
    StepUnderflow,
    ConvergenceFailure,
    DegenerateGrid,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::OrderOutOfRange: return "OrderOutOfRange";
        case ErrorKind::NonConvergence: return "NonConvergence";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::NearPole: return "NearPoleError";
        case ErrorKind::BracketFailure: return "BracketFailure";
        case ErrorKind::NoRootInInterval: return "NoRootInInterval";
        case ErrorKind::HypothesisViolated: return "HypothesisViolated";
        case ErrorKind::DimensionError: return "DimensionError";
        case ErrorKind::DenominatorNonpositive: return "DenominatorNonpositive";
        case ErrorKind::StepUnderflow: return "StepUnderflow";
        case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorKind::DegenerateGrid: return "DegenerateGrid";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace besselbound
