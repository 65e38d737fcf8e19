// Built with -mavx2 -mfma; only reached through the dispatch table after a
// CPUID check.

#include <immintrin.h>

#include "kernels_impl.hpp"

namespace weakpath::kernels::detail {

namespace {

inline double* raw(std::span<Complex> a) { return reinterpret_cast<double*>(a.data()); }
inline const double* raw(std::span<const Complex> a) {
    return reinterpret_cast<const double*>(a.data());
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// lanes (x0, x1, x2, x3) -> x0 - x1 + x2 - x3
inline double alternating_sum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_sub_sd(s, _mm_unpackhi_pd(s, s)));
}

// Two complex products per register: (ar br - ai bi, ar bi + ai br).
inline __m256d cmul(__m256d a, __m256d b) {
    const __m256d ar = _mm256_movedup_pd(a);
    const __m256d ai = _mm256_permute_pd(a, 0b1111);
    const __m256d b_swapped = _mm256_permute_pd(b, 0b0101);
    return _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, b_swapped));
}

void multiply_avx2(std::span<Complex> a, std::span<const Complex> b) {
    double* pa = raw(a);
    const double* pb = raw(b);
    const std::size_t n = a.size();
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * j);
        const __m256d vb = _mm256_loadu_pd(pb + 2 * j);
        _mm256_storeu_pd(pa + 2 * j, cmul(va, vb));
    }
    for (; j < n; ++j) {
        const double ar = a[j].real(), ai = a[j].imag();
        const double br = b[j].real(), bi = b[j].imag();
        a[j] = Complex{ar * br - ai * bi, ar * bi + ai * br};
    }
}

void scale_avx2(std::span<Complex> a, double s) {
    double* p = raw(a);
    const std::size_t count = 2 * a.size();
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t j = 0;
    for (; j + 4 <= count; j += 4) _mm256_storeu_pd(p + j, _mm256_mul_pd(_mm256_loadu_pd(p + j), vs));
    for (; j < count; ++j) p[j] *= s;
}

void conjugate_avx2(std::span<Complex> a) {
    double* p = raw(a);
    const std::size_t count = 2 * a.size();
    const __m256d sign = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
    std::size_t j = 0;
    for (; j + 4 <= count; j += 4) _mm256_storeu_pd(p + j, _mm256_xor_pd(_mm256_loadu_pd(p + j), sign));
    for (; j < count; j += 2) p[j + 1] = -p[j + 1];
}

// conj(a) b: real part collects a*b lane-wise, imaginary part a*swap(b)
// with alternating signs.
Complex inner_avx2(std::span<const Complex> bra, std::span<const Complex> ket) {
    const double* pa = raw(bra);
    const double* pb = raw(ket);
    const std::size_t n = bra.size();
    __m256d re0 = _mm256_setzero_pd(), re1 = _mm256_setzero_pd();
    __m256d im0 = _mm256_setzero_pd(), im1 = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d a0 = _mm256_loadu_pd(pa + 2 * j);
        const __m256d a1 = _mm256_loadu_pd(pa + 2 * j + 4);
        const __m256d b0 = _mm256_loadu_pd(pb + 2 * j);
        const __m256d b1 = _mm256_loadu_pd(pb + 2 * j + 4);
        re0 = _mm256_fmadd_pd(a0, b0, re0);
        re1 = _mm256_fmadd_pd(a1, b1, re1);
        im0 = _mm256_fmadd_pd(a0, _mm256_permute_pd(b0, 0b0101), im0);
        im1 = _mm256_fmadd_pd(a1, _mm256_permute_pd(b1, 0b0101), im1);
    }
    double re = hsum(_mm256_add_pd(re0, re1));
    double im = alternating_sum(_mm256_add_pd(im0, im1));
    for (; j < n; ++j) {
        const double ar = bra[j].real(), ai = bra[j].imag();
        const double br = ket[j].real(), bi = ket[j].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

Complex inner_weighted_avx2(std::span<const Complex> bra, std::span<const double> w,
                            std::span<const Complex> ket) {
    const double* pa = raw(bra);
    const double* pb = raw(ket);
    const double* pw = w.data();
    const std::size_t n = bra.size();
    __m256d re = _mm256_setzero_pd();
    __m256d im = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
        // (w0, w0, w1, w1)
        const __m256d ww = _mm256_permute4x64_pd(_mm256_castpd128_pd256(_mm_loadu_pd(pw + j)), 0x50);
        const __m256d a = _mm256_mul_pd(_mm256_loadu_pd(pa + 2 * j), ww);
        const __m256d b = _mm256_loadu_pd(pb + 2 * j);
        re = _mm256_fmadd_pd(a, b, re);
        im = _mm256_fmadd_pd(a, _mm256_permute_pd(b, 0b0101), im);
    }
    double sre = hsum(re);
    double sim = alternating_sum(im);
    for (; j < n; ++j) {
        const double ar = bra[j].real() * w[j], ai = bra[j].imag() * w[j];
        const double br = ket[j].real(), bi = ket[j].imag();
        sre += ar * br + ai * bi;
        sim += ar * bi - ai * br;
    }
    return {sre, sim};
}

double norm_sq_avx2(std::span<const Complex> a) {
    const double* p = raw(a);
    const std::size_t count = 2 * a.size();
    __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 8 <= count; j += 8) {
        const __m256d v0 = _mm256_loadu_pd(p + j);
        const __m256d v1 = _mm256_loadu_pd(p + j + 4);
        acc0 = _mm256_fmadd_pd(v0, v0, acc0);
        acc1 = _mm256_fmadd_pd(v1, v1, acc1);
    }
    double sum = hsum(_mm256_add_pd(acc0, acc1));
    for (; j < count; ++j) sum += p[j] * p[j];
    return sum;
}

}  // namespace

const KernelTable avx2_table{"avx2",     multiply_avx2,       scale_avx2,  conjugate_avx2,
                             inner_avx2, inner_weighted_avx2, norm_sq_avx2};

}  // namespace weakpath::kernels::detail
