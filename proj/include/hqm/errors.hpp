#pragma once

#include <stdexcept>
#include <string>

namespace hqm {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Requested value is an infinite or zero limit (K(1), phi(0), ...).
class DivergenceError : public std::domain_error {
public:
    explicit DivergenceError(const std::string& what) : std::domain_error(what) {}
};

// A denominator or Jacobian vanished where the formula needs it nonzero.
class DegeneracyError : public std::runtime_error {
public:
    explicit DegeneracyError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical routine failed to reach its target tolerance.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_tolerance(achieved) {}
    double achieved_tolerance;
};

// analytic_radius asked for a variant without a closed form.
class UnsupportedVariantError : public std::runtime_error {
public:
    explicit UnsupportedVariantError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hqm
