#pragma once

#include <stdexcept>
#include <string>

namespace gencomplex {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An integrand or objective returned a non-finite value.
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(const std::string& what, double abscissa)
        : std::runtime_error(what + " at x = " + std::to_string(abscissa)), abscissa_(abscissa)
    {
    }

    double abscissa() const noexcept { return abscissa_; }

private:
    double abscissa_;
};

/// A semi-infinite integral does not converge (e.g. a momentum-space
/// Renyi integral below its convergence threshold in the order).
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gencomplex
