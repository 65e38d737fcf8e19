#include "weakpath/core.hpp"

#include <cmath>
#include <numbers>

namespace weakpath {

void PhysConfig::validate() const {
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive(m)) throw DomainError("mass must be positive");
    if (!positive(hbar)) throw DomainError("hbar must be positive");
    if (!positive(T)) throw DomainError("flight time T must be positive");
    if (!positive(x_i)) throw DomainError("slit half-separation x_i must be positive");
}

Complex checked_div(Complex numerator, Complex denominator) {
    if (denominator == Complex{0.0, 0.0}) {
        throw SingularTransition("division by an exactly vanishing transition amplitude");
    }
    return numerator / denominator;
}

Complex free_propagator(double x_to, double x_from, double t, const PhysConfig& cfg) {
    cfg.validate();
    if (!(t > 0.0)) throw DomainError("free_propagator requires t > 0");
    const double magnitude = std::sqrt(cfg.m / (2.0 * std::numbers::pi * cfg.hbar * t));
    const double dx = x_to - x_from;
    const double phase = cfg.m * dx * dx / (2.0 * cfg.hbar * t) - std::numbers::pi / 4.0;
    return std::polar(magnitude, phase);
}

}  // namespace weakpath
