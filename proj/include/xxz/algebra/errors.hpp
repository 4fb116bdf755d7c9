#pragma once

#include <stdexcept>
#include <string>

namespace xxz {

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : AlgebraError {
    DivisionByZero() : AlgebraError("division by zero") {}
};

// Carries a printable remainder so callers can report what was left over.
struct InexactDivision : AlgebraError {
    std::string remainder;
    explicit InexactDivision(std::string rem)
        : AlgebraError("inexact division, remainder " + rem), remainder(std::move(rem)) {}
};

struct RosterMismatch : AlgebraError {
    using AlgebraError::AlgebraError;
};

struct ParseError : AlgebraError {
    using AlgebraError::AlgebraError;
};

}  // namespace xxz
