#pragma once

#include <span>

#include "weakpath/core.hpp"

// Data-parallel inner loops of the grid oracle.
//
// Every kernel exists as a scalar reference and, on x86-64, as an AVX2/FMA
// variant compiled in its own translation unit. The variant is picked once
// at first use from CPUID; setting WEAKPATH_KERNELS=scalar in the
// environment forces the reference path. Reductions in the SIMD path sum in
// a different order, so results agree with the reference to rounding, not
// bit for bit.

namespace weakpath::kernels {

struct KernelTable {
    const char* name;
    /// a[j] *= b[j]
    void (*multiply)(std::span<Complex> a, std::span<const Complex> b);
    /// a[j] *= s
    void (*scale)(std::span<Complex> a, double s);
    /// a[j] = conj(a[j])
    void (*conjugate)(std::span<Complex> a);
    /// sum_j conj(bra[j]) ket[j]
    Complex (*inner)(std::span<const Complex> bra, std::span<const Complex> ket);
    /// sum_j conj(bra[j]) w[j] ket[j]
    Complex (*inner_weighted)(std::span<const Complex> bra, std::span<const double> w,
                              std::span<const Complex> ket);
    /// sum_j |a[j]|^2
    double (*norm_sq)(std::span<const Complex> a);
};

const KernelTable& scalar();

/// nullptr when the library was built without the AVX2 unit or the CPU
/// lacks AVX2/FMA.
const KernelTable* avx2();

/// All kernel tables usable on this machine, reference first.
std::span<const KernelTable* const> available();

const KernelTable& active();

// Size-checked entry points on the active table.
void multiply(std::span<Complex> a, std::span<const Complex> b);
void scale(std::span<Complex> a, double s);
void conjugate(std::span<Complex> a);
Complex inner(std::span<const Complex> bra, std::span<const Complex> ket);
Complex inner_weighted(std::span<const Complex> bra, std::span<const double> w,
                       std::span<const Complex> ket);
double norm_sq(std::span<const Complex> a);

}  // namespace weakpath::kernels
