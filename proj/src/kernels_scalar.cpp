#include "kernels_impl.hpp"

namespace weakpath::kernels::detail {

namespace {

void multiply_ref(std::span<Complex> a, std::span<const Complex> b) {
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double ar = a[j].real(), ai = a[j].imag();
        const double br = b[j].real(), bi = b[j].imag();
        a[j] = Complex{ar * br - ai * bi, ar * bi + ai * br};
    }
}

void scale_ref(std::span<Complex> a, double s) {
    for (Complex& v : a) v = Complex{v.real() * s, v.imag() * s};
}

void conjugate_ref(std::span<Complex> a) {
    for (Complex& v : a) v = Complex{v.real(), -v.imag()};
}

Complex inner_ref(std::span<const Complex> bra, std::span<const Complex> ket) {
    double re = 0.0, im = 0.0;
    for (std::size_t j = 0; j < bra.size(); ++j) {
        const double ar = bra[j].real(), ai = bra[j].imag();
        const double br = ket[j].real(), bi = ket[j].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

Complex inner_weighted_ref(std::span<const Complex> bra, std::span<const double> w,
                           std::span<const Complex> ket) {
    double re = 0.0, im = 0.0;
    for (std::size_t j = 0; j < bra.size(); ++j) {
        const double ar = bra[j].real() * w[j], ai = bra[j].imag() * w[j];
        const double br = ket[j].real(), bi = ket[j].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

double norm_sq_ref(std::span<const Complex> a) {
    double sum = 0.0;
    for (const Complex& v : a) sum += v.real() * v.real() + v.imag() * v.imag();
    return sum;
}

}  // namespace

const KernelTable scalar_table{"scalar",      multiply_ref,       scale_ref,  conjugate_ref,
                               inner_ref,     inner_weighted_ref, norm_sq_ref};

}  // namespace weakpath::kernels::detail
