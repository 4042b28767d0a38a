#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace tanlaw {

/// Bad input to a public operation (out-of-range order, mismatched ground set, ...).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two independent routes to the same exact or numeric value disagree.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Iteration failed to converge, or a numeric postcondition was violated.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Request exceeds a hard enumeration or size bound.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluation point too close to a pole; carries the nearest pole.
class PoleError : public std::domain_error {
public:
    PoleError(const std::string& what, std::complex<double> nearest)
        : std::domain_error(what), nearest_pole_(nearest) {}

    std::complex<double> nearest_pole() const noexcept { return nearest_pole_; }

private:
    std::complex<double> nearest_pole_;
};

}  // namespace tanlaw
