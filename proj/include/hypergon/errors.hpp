#pragma once

#include <stdexcept>
#include <string>

namespace hypergon {

// Argument lies outside the mathematical domain of a function.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A verifier or engine was configured with inconsistent parameters.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Evaluating a sampled function failed at a specific grid point.
class GridEvaluationError : public DomainError {
public:
    GridEvaluationError(const std::string& what, double point)
        : DomainError(what + " (at x=" + std::to_string(point) + ")"), point_(point) {}

    double point() const noexcept { return point_; }

private:
    double point_;
};

class NoSignChangeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The comparison polygon is acute, so the inequality is not claimed.
class HypothesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Side counts do not satisfy 2n = 4(1-k) + 2*sum(m_i).
class IdentityViolationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An intermediate merged polygon came out acute.
class StepAngleViolationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hypergon
