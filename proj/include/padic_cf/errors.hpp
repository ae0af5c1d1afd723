#pragma once

#include <stdexcept>
#include <string>

namespace padic_cf {

struct DivisionByZeroError : std::domain_error {
    explicit DivisionByZeroError(const std::string& what) : std::domain_error(what) {}
};

struct MixedFieldError : std::invalid_argument {
    explicit MixedFieldError(const std::string& what) : std::invalid_argument(what) {}
};

struct NotResidueError : std::domain_error {
    explicit NotResidueError(const std::string& what) : std::domain_error(what) {}
};

struct PrecisionExhaustedError : std::runtime_error {
    explicit PrecisionExhaustedError(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroPolynomialError : std::domain_error {
    explicit ZeroPolynomialError(const std::string& what) : std::domain_error(what) {}
};

struct ReduciblePolynomialError : std::domain_error {
    explicit ReduciblePolynomialError(const std::string& what) : std::domain_error(what) {}
};

struct DegenerateRelationError : std::domain_error {
    explicit DegenerateRelationError(const std::string& what) : std::domain_error(what) {}
};

struct HypothesisViolatedError : std::domain_error {
    explicit HypothesisViolatedError(const std::string& what) : std::domain_error(what) {}
};

struct InfeasibleSpecError : std::invalid_argument {
    explicit InfeasibleSpecError(const std::string& what) : std::invalid_argument(what) {}
};

struct SizeLimitError : std::length_error {
    explicit SizeLimitError(const std::string& what) : std::length_error(what) {}
};

struct RationalSlopeError : std::invalid_argument {
    explicit RationalSlopeError(const std::string& what) : std::invalid_argument(what) {}
};

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace padic_cf
