#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weakpath/core.hpp"
#include "weakpath/selection.hpp"
#include "weakpath/weak.hpp"

// Grid-based verification path for the closed-form double-slit results.
//
// Slits and detector are Gaussians of finite spread on a periodic position
// lattice, evolved spectrally. Nothing here evaluates the closed-form
// double-slit expressions; the two routes only meet in tests and in
// weakpath::verify.

namespace weakpath::oracle {

/// Default regularization width of slits and detector.
inline constexpr double default_sigma = 0.005;

/// Uniform periodic lattice x_j = -L + j dx, dx = 2L / N.
struct Grid {
    double half_width = 0.0;
    std::size_t points = 0;

    double spacing() const { return 2.0 * half_width / static_cast<double>(points); }
    double position(std::size_t j) const {
        return -half_width + static_cast<double>(j) * spacing();
    }
    std::vector<double> positions() const;

    /// N a power of two >= 1024 and L > 0, else DomainError.
    void validate() const;

    /// sigma >= 3 dx.
    bool resolves(double sigma) const;

    /// L > 4 (extent + sqrt(extent^2 + (hbar T / (2 m sigma))^2)) with
    /// extent = max(x_i, |x_f| of interest): the freely spread state stays
    /// clear of its periodic images.
    bool satisfies_extent(double sigma, const PhysConfig& cfg, double extent = 0.0) const;

    /// Smallest lattice meeting both conditions for sigma with 5% margin on L.
    static Grid fitted(double sigma, const PhysConfig& cfg, double extent = 0.0);
};

/// Discretized state. One spatial component for untagged states, two
/// (spin up, spin down) for which-path tagged ones.
struct GridState {
    Grid grid;
    std::vector<std::vector<Complex>> components;

    bool tagged() const { return components.size() == 2; }
    /// sum_j |psi_j|^2 dx over all components
    double norm() const;
};

enum class SlitMask { both, plus_only, minus_only };

/// Tag of the position operator: x (x) 1, x (x) |+><+|, or x (x) |-><-|.
enum class PositionTag { none, plus, minus };

/// Equal-weight superposition of Gaussians of spread sigma at +x_i and -x_i,
/// normalized on the lattice. Tagged states pair +x_i with spin up and -x_i
/// with spin down. Throws GridResolutionError when sigma < 3 dx.
GridState make_slit_state(double sigma, bool tagged, const Grid& grid, const PhysConfig& cfg,
                          SlitMask mask = SlitMask::both);

/// Untagged normalized Gaussian of spread sigma_det centred on x_f.
GridState make_detector_state(double x_f, double sigma_det, const Grid& grid);

/// Exact free evolution on the lattice by t >= 0 (spectral phase multiply).
GridState propagate(const GridState& state, double t, const PhysConfig& cfg);

/// Evolution by -t, as conj(propagate(conj(state), t)).
GridState unpropagate(const GridState& state, double t, const PhysConfig& cfg);

/// <detector at x_f, spinor| state> by lattice quadrature. Tagged states need
/// a spinor; untagged states must not be given one.
Complex detect_amplitude(const GridState& state, double x_f, double sigma_det,
                         const std::optional<SpinPost>& spinor = std::nullopt);

/// |amplitude|^2 divided by the squared delta weights of slit and detector,
/// comparable with a point-slit probability density.
double fringe_density(const GridState& state_at_T, double x_f, double sigma_slit,
                      double sigma_det, const std::optional<SpinPost>& spinor = std::nullopt);

/// Amplitude scale sqrt(m / (pi hbar T)) times the delta weights; denominators
/// below eps_div times this are flagged near-singular.
double regularized_amplitude_scale(double sigma_slit, double sigma_det, const PhysConfig& cfg);

/// Weak value of x (or a spin-tagged x^pm) between a forward-evolved
/// pre-selected state and a backward-evolved detector state at the same time.
weak::WeakValueResult weak_value_x_from_states(const GridState& forward,
                                               const GridState& backward_detector,
                                               const std::optional<SpinPost>& spinor,
                                               PositionTag tag, double amplitude_scale);

/// <psi| U(T - t) x U(t) |phi> / <psi| U(T) |phi> on the lattice.
/// sigma regularizes the slits; the detector uses sigma_det (defaults to sigma).
weak::WeakValueResult oracle_weak_value_x(double t, const Selection& selection, double sigma,
                                          const Grid& grid,
                                          PositionTag tag = PositionTag::none,
                                          std::optional<double> sigma_det = std::nullopt,
                                          SlitMask mask = SlitMask::both);

/// Momentum weak value i K'(0)/K(0), K(alpha) the detector amplitude with its
/// centre moved to x_f - alpha hbar.
Complex oracle_weak_value_p(const Selection& selection, double sigma, const Grid& grid,
                            double h = weak::default_step,
                            std::optional<double> sigma_det = std::nullopt,
                            SlitMask mask = SlitMask::both);

/// One regularized quantity traced as sigma shrinks.
struct SweepSpec {
    std::string name;
    /// Oracle value at slit/detector width sigma on the given lattice.
    std::function<Complex(double sigma, const Grid& grid)> evaluate;
    Complex reference;
    double tolerance = 0.0;
    bool relative = false;
    /// Compare only the imaginary part against the reference's.
    bool imaginary_only = false;
};

struct SweepRow {
    double sigma = 0.0;
    std::optional<Complex> value;
    std::optional<double> error;
    std::string failure;
};

struct ConvergenceReport {
    std::string name;
    std::vector<SweepRow> rows;
    double tolerance = 0.0;
    bool monotone = false;
    bool passed = false;
};

/// Runs spec.evaluate over decreasing sigmas. Without an explicit grid each
/// sigma gets Grid::fitted. Passes when errors decrease (one upward step
/// allowed) and the last error is below tolerance. Failures are reported,
/// not thrown.
ConvergenceReport convergence_sweep(const SweepSpec& spec, std::span<const double> sigmas,
                                    const std::optional<Grid>& grid, const PhysConfig& cfg,
                                    double extent = 0.0);

}  // namespace weakpath::oracle
