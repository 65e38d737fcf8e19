#pragma once

#include <stdexcept>
#include <string>

namespace weakpath {

/// Argument outside the mathematical domain of an operation (non-positive
/// width, backward time, unsupported moment order, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The transition amplitude in a weak-value denominator is exactly zero.
/// Near-zero denominators are not errors; they are flagged on the result.
class SingularTransition : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A width is not resolvable on the chosen position lattice.
class GridResolutionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Division by a vanishing real scale factor when normalizing a tagged
/// trajectory.
class NormalizationUndefined : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace weakpath
