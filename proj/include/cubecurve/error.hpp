#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubecurve {

enum class ErrorKind {
    NonPrime,
    WrongResidue,
    SingularCurve,
    CapExceeded,
    NotOnCurve,
    HasseViolation,
    Overflow,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Raised by every validating operation in the library. The kind is the
/// machine-readable part; what() carries a human-readable detail line.
class CurveError : public std::runtime_error {
public:
    CurveError(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace cubecurve
