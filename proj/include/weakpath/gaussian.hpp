#pragma once

#include "weakpath/core.hpp"

namespace weakpath {

/// psi(x) = exp(log_coeff - quad * x^2 + lin * x)
///
/// The family is closed under free evolution and under products, so every
/// overlap between evolved slit and detector states has a closed form. The
/// coefficient is stored as a logarithm: narrow slits (sigma ~ 1e-3) have
/// log_coeff of order -1e5 that cancels against lin^2 / (4 quad) only at
/// the end of a computation.
struct ComplexGaussian {
    Complex log_coeff{0.0, 0.0};
    Complex quad{0.0, 0.0};
    Complex lin{0.0, 0.0};

    Complex operator()(double x) const;
};

/// Normalized real Gaussian centred on x0 with position spread sigma:
/// (2 pi sigma^2)^{-1/4} exp(-(x - x0)^2 / (4 sigma^2)).
ComplexGaussian gaussian_from_slit(double x0, double sigma, const PhysConfig& cfg);

/// Exact free evolution by time t >= 0. With D = 1 + 2 i hbar t quad / m:
/// quad -> quad / D, lin -> lin / D,
/// log_coeff -> log_coeff + i hbar t lin^2 / (2 m D) - log(D) / 2.
ComplexGaussian evolve_gaussian(const ComplexGaussian& g, double t, const PhysConfig& cfg);

/// \int dx conj(bra(x)) ket(x). Requires Re(conj(bra.quad) + ket.quad) > 0.
Complex overlap(const ComplexGaussian& bra, const ComplexGaussian& ket);

/// \int dx conj(bra(x)) x^power ket(x) for power in {0, 1, 2}.
Complex moment_overlap(const ComplexGaussian& bra, const ComplexGaussian& ket, int power);

/// Amplitude factor relating a normalized Gaussian of spread sigma to the
/// delta function it approximates: (8 pi sigma^2)^{1/4}.
double delta_weight(double sigma);

}  // namespace weakpath
