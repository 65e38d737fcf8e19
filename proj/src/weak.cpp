#include "weakpath/weak.hpp"

#include <cmath>

namespace weakpath::weak {

namespace {

void check_step(double h) {
    if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("derivative step must be positive");
}

// Central difference at h and h/2 plus one Richardson level: O(h^4).
template <typename F>
auto richardson_derivative(const F& f, double h) {
    const auto coarse = (f(h) - f(-h)) / (2.0 * h);
    const double half = 0.5 * h;
    const auto fine = (f(half) - f(-half)) / (2.0 * half);
    return (4.0 * fine - coarse) / 3.0;
}

Complex sum_at(std::span<const Amplitude> branches, double alpha) {
    Complex total{0.0, 0.0};
    for (const auto& k : branches) total += k(alpha);
    return total;
}

}  // namespace

Complex BranchDecomposition::total_amplitude() const {
    Complex total{0.0, 0.0};
    for (const Complex& k : branch_amplitudes) total += k;
    return total;
}

BranchDecomposition make_decomposition(std::vector<Complex> amplitudes,
                                       std::vector<Complex> weak_values) {
    if (amplitudes.empty()) throw DomainError("decomposition needs at least one branch");
    if (amplitudes.size() != weak_values.size()) {
        throw DomainError("decomposition: amplitude and weak-value counts differ");
    }
    BranchDecomposition d;
    d.branch_amplitudes = std::move(amplitudes);
    d.branch_weak_values = std::move(weak_values);
    const Complex total = d.total_amplitude();
    if (total == Complex{0.0, 0.0}) {
        throw SingularTransition("branch amplitudes cancel exactly");
    }
    const double total_prob = std::norm(total);
    d.relative_probabilities.reserve(d.branch_amplitudes.size());
    for (const Complex& k : d.branch_amplitudes) {
        d.relative_probabilities.push_back(std::norm(k) / total_prob);
    }
    return d;
}

WeakValueResult weak_value_ratio(Complex numerator, Complex denominator, double scale) {
    if (!(scale > 0.0)) throw DomainError("weak_value_ratio requires scale > 0");
    WeakValueResult r;
    r.value = checked_div(numerator, denominator);
    r.denom_mag = std::abs(denominator);
    r.near_singular = r.denom_mag < eps_div * scale;
    return r;
}

Complex weak_value_from_derivative(const Amplitude& amplitude, double h) {
    check_step(h);
    const Complex k0 = amplitude(0.0);
    const Complex slope = richardson_derivative(amplitude, h);
    return I * checked_div(slope, k0);
}

Complex total_weak_value(const BranchDecomposition& decomp) {
    Complex weighted{0.0, 0.0};
    for (std::size_t k = 0; k < decomp.branch_amplitudes.size(); ++k) {
        weighted += decomp.branch_weak_values[k] * decomp.branch_amplitudes[k];
    }
    return checked_div(weighted, decomp.total_amplitude());
}

ProbabilitySplit decompose_probability(std::span<const Amplitude> branches, double alpha) {
    if (branches.size() < 2) throw DomainError("decompose_probability needs at least two branches");
    ProbabilitySplit split;
    Complex total{0.0, 0.0};
    for (const auto& branch : branches) {
        const Complex k = branch(alpha);
        total += k;
        split.diagonal += std::norm(k);
    }
    split.offdiagonal = std::norm(total) - split.diagonal;
    return split;
}

double interference_index_definition(std::span<const Amplitude> branches, double h) {
    check_step(h);
    if (branches.empty()) throw DomainError("interference index needs at least one branch");
    const Complex k0 = sum_at(branches, 0.0);
    if (k0 == Complex{0.0, 0.0}) throw SingularTransition("total amplitude vanishes at alpha = 0");

    auto offdiagonal = [&](double alpha) {
        Complex total{0.0, 0.0};
        double diagonal = 0.0;
        for (const auto& branch : branches) {
            const Complex k = branch(alpha);
            total += k;
            diagonal += std::norm(k);
        }
        return std::norm(total) - diagonal;
    };
    return 0.5 * richardson_derivative(offdiagonal, h) / std::norm(k0);
}

double interference_index_gap(Complex total_weak, const BranchDecomposition& decomp) {
    Complex average{0.0, 0.0};
    for (std::size_t k = 0; k < decomp.branch_weak_values.size(); ++k) {
        average += decomp.relative_probabilities[k] * decomp.branch_weak_values[k];
    }
    return (total_weak - average).imag();
}

double interference_index_offdiagonal(const BranchDecomposition& decomp) {
    const Complex total = decomp.total_amplitude();
    if (total == Complex{0.0, 0.0}) throw SingularTransition("branch amplitudes cancel exactly");
    const double total_prob = std::norm(total);
    const auto& amps = decomp.branch_amplitudes;
    double index = 0.0;
    for (std::size_t k = 0; k < amps.size(); ++k) {
        for (std::size_t j = 0; j < amps.size(); ++j) {
            if (j == k) continue;
            index += (decomp.branch_weak_values[k] * amps[k] * std::conj(amps[j])).imag() / total_prob;
        }
    }
    return index;
}

}  // namespace weakpath::weak
