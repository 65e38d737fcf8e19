#pragma once

#include <array>
#include <span>
#include <vector>

#include "weakpath/core.hpp"
#include "weakpath/selection.hpp"
#include "weakpath/weak.hpp"

namespace weakpath::doubleslit {

/// Scale factors with x^pm_w(t) = (R^pm + i I^pm) x^pm_cl(t).
struct ScaleFactors {
    double r_plus = 0.0;
    double i_plus = 0.0;
    double r_minus = 0.0;
    double i_minus = 0.0;
    double chi = 0.0;
};

/// Weak trajectory samples on [0, T] together with the transition
/// probability of the run that produced them.
struct TrajectorySeries {
    std::vector<double> times;
    std::vector<Complex> values;
    double transition_probability = 0.0;
    bool near_singular = false;
};

struct TaggedTrajectories {
    TrajectorySeries plus;
    TrajectorySeries minus;
};

struct BranchMomenta {
    double p_plus = 0.0;
    double p_minus = 0.0;
};

struct ClassicalPair {
    double x_plus = 0.0;
    double x_minus = 0.0;
};

/// |R^pm| at or below this is treated as zero when normalizing.
inline constexpr double scale_factor_floor = 1e-12;

/// m x_f x_i / (hbar T): half the phase difference between the two paths.
double path_phase(double x_f, const PhysConfig& cfg);

/// Amplitude scale sqrt(m / (pi hbar T)) against which near-singularity is
/// judged; the plain amplitude reaches it at constructive maxima.
double amplitude_scale(const PhysConfig& cfg);

/// Uniform grid of n >= 2 times on [0, T], first exactly 0, last exactly T.
std::vector<double> uniform_times(const PhysConfig& cfg, std::size_t n = 101);

/// Branch amplitudes K_pm(alpha) = <x_f - alpha hbar| U(T) |pm x_i> / sqrt2.
std::array<Complex, 2> slit_amplitudes(double x_f, double alpha, const PhysConfig& cfg);

/// The two branch amplitudes as functions of the translation parameter.
std::array<weak::Amplitude, 2> slit_amplitude_functions(double x_f, const PhysConfig& cfg);

/// Spin-tagged branch amplitudes: cos(theta/2) K_+ and e^{-i eta} sin(theta/2) K_-.
std::array<Complex, 2> tagged_amplitudes(double x_f, double theta, double eta,
                                         const PhysConfig& cfg);

/// Point-slit fringe density (m / (pi hbar T)) cos^2(m x_f x_i / (hbar T)).
double fringe_probability(double x_f, const PhysConfig& cfg);

/// Fringe density for Gaussian slits of spread sigma_slit detected by a
/// Gaussian of spread sigma_det, divided by the delta weights of both so it
/// tends to fringe_probability as the widths shrink.
double fringe_probability_gaussian(double x_f, double sigma_slit, double sigma_det,
                                   const PhysConfig& cfg);

/// |K(0)|^2 for the spin-tagged selection, from the amplitudes.
double tagged_transition_probability(double x_f, double theta, double eta,
                                     const PhysConfig& cfg);

weak::WeakValueResult momentum_weak_value(double x_f, const PhysConfig& cfg);

BranchMomenta branch_momentum_weak_values(double x_f, const PhysConfig& cfg);

/// Branches K_pm(0) with their momentum weak values p_pm.
weak::BranchDecomposition momentum_decomposition(double x_f, const PhysConfig& cfg);

double interference_index_closed(double x_f, const PhysConfig& cfg);

ClassicalPair classical_trajectories(double x_f, double t, const PhysConfig& cfg);

TrajectorySeries weak_trajectory(double x_f, std::span<const double> times,
                                 const PhysConfig& cfg);

ScaleFactors scale_factors(double x_f, double theta, double eta, const PhysConfig& cfg);

/// Branches of the spin-tagged run at time t: tagged amplitudes with the
/// classical positions x^pm_cl(t) as branch weak values of x.
weak::BranchDecomposition tagged_position_decomposition(double x_f, double theta, double eta,
                                                        double t, const PhysConfig& cfg);

TaggedTrajectories tagged_weak_trajectories(double x_f, double theta, double eta,
                                            std::span<const double> times,
                                            const PhysConfig& cfg);

/// Tagged trajectories divided by R^pm. Throws NormalizationUndefined when
/// the requested branch has |R| <= scale_factor_floor.
TaggedTrajectories normalized_tagged_trajectories(double x_f, double theta, double eta,
                                                  std::span<const double> times,
                                                  const PhysConfig& cfg);

/// Single-branch variant used where one branch is undefined and the other is
/// still wanted (plus = true for the S_+ branch).
TrajectorySeries normalized_tagged_branch(double x_f, double theta, double eta,
                                          std::span<const double> times, bool plus,
                                          const PhysConfig& cfg);

}  // namespace weakpath::doubleslit
