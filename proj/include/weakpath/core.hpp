#pragma once

#include <complex>

#include "weakpath/errors.hpp"

namespace weakpath {

using Complex = std::complex<double>;

inline constexpr Complex I{0.0, 1.0};

/// Physical constants and slit geometry in dimensionless units.
/// Slits sit at +x_i and -x_i; the screen is reached at time T.
struct PhysConfig {
    double m = 1.0;
    double hbar = 1.0;
    double T = 1.0;
    double x_i = 1.0;

    /// Throws DomainError unless every field is strictly positive and finite.
    void validate() const;
};

/// numerator / denominator, throwing SingularTransition on an exact zero
/// denominator instead of producing inf/NaN.
Complex checked_div(Complex numerator, Complex denominator);

/// Free-particle kernel <x_to| exp(-i H t / hbar) |x_from> for H = p^2/2m.
///
/// The prefactor sqrt(m / (2 pi i hbar t)) is taken on the principal branch,
/// i.e. its phase is exactly e^{-i pi/4}. Requires t > 0.
Complex free_propagator(double x_to, double x_from, double t, const PhysConfig& cfg);

}  // namespace weakpath
