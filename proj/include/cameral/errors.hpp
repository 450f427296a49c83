#pragma once

#include <stdexcept>
#include <string>

namespace cameral {

// Numeric values double as process exit codes for the command line tool.
enum class ErrorKind : int {
    input = 2,
    degenerate = 3,
    irrational = 4,
    internal = 5,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Malformed or inconsistent user input.
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(ErrorKind::input, what) {}
};

/// The discriminant has a repeated zero, or a branch point is not a simple
/// collision of two sheets.
class NonSimpleBranch : public Error {
public:
    explicit NonSimpleBranch(const std::string& what) : Error(ErrorKind::degenerate, what) {}
};

/// A branch point (or a spectator sheet at one) is not rational.
class IrrationalBranchPoint : public Error {
public:
    explicit IrrationalBranchPoint(const std::string& what) : Error(ErrorKind::irrational, what) {}
};

/// Arithmetic precondition violated: division by zero, non-unit inverse,
/// mismatched variables or radicands.
class MathError : public Error {
public:
    explicit MathError(const std::string& what) : Error(ErrorKind::internal, what) {}
};

/// A coefficient outside the guaranteed-correct window of a truncated series
/// was requested.
class TruncationError : public MathError {
public:
    explicit TruncationError(const std::string& what) : MathError(what) {}
};

/// An identity that must hold by construction failed (for example a square
/// root leaking into a value that has to be rational).
class InternalAssertion : public Error {
public:
    explicit InternalAssertion(const std::string& what) : Error(ErrorKind::internal, what) {}
};

}  // namespace cameral
