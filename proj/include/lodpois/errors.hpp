#pragma once

#include <stdexcept>
#include <string>

namespace lodpois {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct DuplicateName : Error {
    using Error::Error;
};

// Raised when load_algebra rejects structure constants. Carries the first
// failing basis triple and the nonzero defect vector, pre-rendered.
struct LeibnizViolation : Error {
    LeibnizViolation(std::size_t i, std::size_t j, std::size_t k, std::string residual_text)
        : Error("Leibniz identity fails at basis triple (" + std::to_string(i) + "," +
                std::to_string(j) + "," + std::to_string(k) + "), residual " + residual_text),
          i(i), j(j), k(k), residual(std::move(residual_text)) {}
    std::size_t i, j, k;
    std::string residual;
};

// Quotient construction produced something the theory forbids (non-Jacobi
// quotient, ill-defined action). Only reachable through unchecked inputs.
struct InternalConsistency : Error {
    using Error::Error;
};

struct LiezationMismatch : Error {
    LiezationMismatch() : Error("operands belong to different Liezations") {}
};

struct GuardExceeded : Error {
    using Error::Error;
};

struct NotAHomomorphism : Error {
    using Error::Error;
};

struct NotDivisibleByH : Error {
    using Error::Error;
};

struct SyntaxError : Error {
    SyntaxError(std::size_t line, std::size_t column, const std::string& message)
        : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) +
                ": " + message),
          line(line), column(column) {}
    std::size_t line, column;
};

struct UnknownBasisName : Error {
    using Error::Error;
};

struct ArityError : Error {
    using Error::Error;
};

} // namespace lodpois
