#pragma once

#include <stdexcept>
#include <string>

namespace bandedge {

// Detuning within the exclusion window of the degenerate point
// d* = -3/4^(1/3), where two roots of the characteristic cubic merge and
// the residues a_j have a pole.
class DegenerateDetuningError : public std::domain_error {
public:
    explicit DegenerateDetuningError(const std::string& what)
        : std::domain_error(what) {}
};

// Roots came out closer together than the conditioning floor admits.
class RootConditioningError : public std::domain_error {
public:
    explicit RootConditioningError(const std::string& what)
        : std::domain_error(what) {}
};

// A matrix handed in as a density matrix fails the hermiticity / trace /
// positivity tolerances.
class InvalidStateError : public std::invalid_argument {
public:
    explicit InvalidStateError(const std::string& what)
        : std::invalid_argument(what) {}
};

// Bell-like state with alpha in {0, 1}: separable, no death threshold to
// speak of.
class DegenerateStateError : public std::domain_error {
public:
    explicit DegenerateStateError(const std::string& what)
        : std::domain_error(what) {}
};

// Bath discretization with too few modes or a cutoff below the
// trustworthy range.
class InsufficientBathError : public std::invalid_argument {
public:
    explicit InsufficientBathError(const std::string& what)
        : std::invalid_argument(what) {}
};

// Dense eigensolver did not converge.
class EigensolveError : public std::runtime_error {
public:
    explicit EigensolveError(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace bandedge
