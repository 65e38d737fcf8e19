#pragma once

#include <functional>
#include <span>
#include <vector>

#include "weakpath/core.hpp"

namespace weakpath::weak {

/// Denominators below eps_div * scale are flagged near-singular.
inline constexpr double eps_div = 1e-8;
inline constexpr double default_step = 1e-3;

/// A transition amplitude as a function of the translation parameter alpha.
using Amplitude = std::function<Complex(double)>;

struct WeakValueResult {
    Complex value;
    double denom_mag = 0.0;
    /// Set when denom_mag < eps_div * scale. The value is still reported; it
    /// may legitimately be very large near a destructive zero.
    bool near_singular = false;
};

/// Intermediate-process data: amplitudes K_k(0), branch weak values A^k_w and
/// relative probabilities Pi_k = |K_k(0)|^2 / |sum_j K_j(0)|^2.
/// The Pi_k do not sum to one in general.
struct BranchDecomposition {
    std::vector<Complex> branch_amplitudes;
    std::vector<Complex> branch_weak_values;
    std::vector<double> relative_probabilities;

    Complex total_amplitude() const;
};

struct ProbabilitySplit {
    double diagonal = 0.0;
    double offdiagonal = 0.0;
};

/// Builds the decomposition and fills Pi_k. Throws SingularTransition if the
/// amplitudes sum to exactly zero, DomainError on size mismatch or no branches.
BranchDecomposition make_decomposition(std::vector<Complex> amplitudes,
                                       std::vector<Complex> weak_values);

WeakValueResult weak_value_ratio(Complex numerator, Complex denominator, double scale);

/// i K'(0) / K(0), with K'(0) from central differences at h and h/2 combined
/// by one Richardson step.
Complex weak_value_from_derivative(const Amplitude& amplitude, double h = default_step);

/// Sum_k A^k_w K_k(0) / Sum_k K_k(0): the weak value of the full process
/// assembled from its branches.
Complex total_weak_value(const BranchDecomposition& decomp);

ProbabilitySplit decompose_probability(std::span<const Amplitude> branches, double alpha);

/// Interference index from its definition: half the derivative of the
/// off-diagonal probability at alpha = 0, divided by |K(0)|^2.
double interference_index_definition(std::span<const Amplitude> branches,
                                     double h = default_step);

/// Im(A_w - sum_k Pi_k A^k_w).
double interference_index_gap(Complex total_weak, const BranchDecomposition& decomp);

/// sum_{j != k} Im(A^k_w K_k conj(K_j) / |K|^2).
double interference_index_offdiagonal(const BranchDecomposition& decomp);

}  // namespace weakpath::weak
