#pragma once

#include <stdexcept>
#include <string>

namespace carlab {

/// Precondition or input violation. The CLI maps this to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Picard iteration refused: the composite operator is not a contraction.
class ContractionError : public Error {
public:
    ContractionError(const std::string& what, double estimate)
        : Error(what), estimate_(estimate) {}
    double estimate() const noexcept { return estimate_; }

private:
    double estimate_;
};

/// Picard iteration hit its iteration cap before the update fell below
/// the tolerance.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, int iterations)
        : Error(what), iterations_(iterations) {}
    int iterations() const noexcept { return iterations_; }

private:
    int iterations_;
};

/// Input carries spectral energy outside the covered dyadic annulus.
class LeakageError : public Error {
public:
    LeakageError(const std::string& what, double leakage)
        : Error(what), leakage_(leakage) {}
    double leakage() const noexcept { return leakage_; }

private:
    double leakage_;
};

}  // namespace carlab
