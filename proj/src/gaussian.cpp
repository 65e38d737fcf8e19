#include "weakpath/gaussian.hpp"

#include <cmath>
#include <numbers>

namespace weakpath {

namespace {

struct ProductExponent {
    Complex c;  // constant
    Complex a;  // -a x^2
    Complex b;  // +b x
};

ProductExponent product_exponent(const ComplexGaussian& bra, const ComplexGaussian& ket) {
    ProductExponent e{std::conj(bra.log_coeff) + ket.log_coeff,
                      std::conj(bra.quad) + ket.quad,
                      std::conj(bra.lin) + ket.lin};
    if (!(e.a.real() > 0.0)) {
        throw DomainError("overlap: product of Gaussians is not integrable (Re(quad) <= 0)");
    }
    return e;
}

// log of \int exp(c - a x^2 + b x) dx for Re(a) > 0
Complex log_gaussian_integral(const ProductExponent& e) {
    return e.c + e.b * e.b / (4.0 * e.a) + 0.5 * std::log(std::numbers::pi / e.a);
}

}  // namespace

Complex ComplexGaussian::operator()(double x) const {
    return std::exp(log_coeff - quad * (x * x) + lin * x);
}

double delta_weight(double sigma) {
    if (!(sigma > 0.0)) throw DomainError("width must be positive");
    return std::pow(8.0 * std::numbers::pi * sigma * sigma, 0.25);
}

ComplexGaussian gaussian_from_slit(double x0, double sigma, const PhysConfig& cfg) {
    cfg.validate();
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw DomainError("gaussian_from_slit requires sigma > 0");
    }
    const double s2 = sigma * sigma;
    ComplexGaussian g;
    g.quad = 1.0 / (4.0 * s2);
    g.lin = x0 / (2.0 * s2);
    g.log_coeff = -x0 * x0 / (4.0 * s2) - 0.25 * std::log(2.0 * std::numbers::pi * s2);
    return g;
}

ComplexGaussian evolve_gaussian(const ComplexGaussian& g, double t, const PhysConfig& cfg) {
    cfg.validate();
    if (!(t >= 0.0)) throw DomainError("evolve_gaussian requires t >= 0");
    if (!(g.quad.real() > 0.0)) throw DomainError("evolve_gaussian requires Re(quad) > 0");
    if (t == 0.0) return g;

    const double kappa = cfg.hbar * t / cfg.m;
    // Im(D) = 2 kappa Re(quad) > 0, so the principal log never crosses its cut.
    const Complex d = 1.0 + 2.0 * kappa * I * g.quad;
    ComplexGaussian out;
    out.quad = g.quad / d;
    out.lin = g.lin / d;
    out.log_coeff = g.log_coeff + I * kappa * g.lin * g.lin / (2.0 * d) - 0.5 * std::log(d);
    return out;
}

Complex overlap(const ComplexGaussian& bra, const ComplexGaussian& ket) {
    return std::exp(log_gaussian_integral(product_exponent(bra, ket)));
}

Complex moment_overlap(const ComplexGaussian& bra, const ComplexGaussian& ket, int power) {
    if (power < 0 || power > 2) throw DomainError("moment_overlap supports power 0, 1 or 2");
    const ProductExponent e = product_exponent(bra, ket);
    const Complex base = std::exp(log_gaussian_integral(e));
    const Complex mean = e.b / (2.0 * e.a);
    switch (power) {
        case 0:
            return base;
        case 1:
            return mean * base;
        default:
            return (1.0 / (2.0 * e.a) + mean * mean) * base;
    }
}

}  // namespace weakpath
