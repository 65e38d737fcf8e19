#include "weakpath/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>

#include "weakpath/gaussian.hpp"
#include "weakpath/kernels.hpp"
#include "weakpath/spectral.hpp"

namespace weakpath::oracle {

namespace {

// Gaussian tails beyond this many widths are below 1e-20 of the peak.
constexpr double window_widths = 14.0;

double gaussian_sample(double x, double x0, double sigma) {
    const double d = x - x0;
    return std::exp(-d * d / (4.0 * sigma * sigma));
}

double gaussian_norm(double sigma) {
    return std::pow(2.0 * std::numbers::pi * sigma * sigma, -0.25);
}

void require_resolved(const Grid& grid, double sigma, const char* what) {
    if (!(sigma > 0.0)) throw DomainError(std::string(what) + " width must be positive");
    if (!grid.resolves(sigma)) {
        throw GridResolutionError(std::string(what) + " width " + std::to_string(sigma) +
                                  " is below 3 grid spacings (dx = " +
                                  std::to_string(grid.spacing()) + ")");
    }
}

struct Window {
    std::size_t first = 0;
    std::size_t count = 0;
};

Window window_around(const Grid& grid, double x0, double sigma) {
    const double reach = window_widths * sigma;
    const double dx = grid.spacing();
    const double lo = std::ceil((x0 - reach + grid.half_width) / dx);
    const double hi = std::floor((x0 + reach + grid.half_width) / dx);
    if (lo < 0.0 || hi >= static_cast<double>(grid.points)) {
        throw GridResolutionError("Gaussian at " + std::to_string(x0) +
                                  " does not fit inside the lattice");
    }
    return {static_cast<std::size_t>(lo), static_cast<std::size_t>(hi - lo) + 1};
}

void check_spinor(const GridState& state, const std::optional<SpinPost>& spinor) {
    if (state.tagged() && !spinor) throw DomainError("tagged state needs a spin post-selection");
    if (!state.tagged() && spinor) throw DomainError("untagged state has no spin to post-select");
}

// Conjugated spinor amplitudes entering the bra: (cos(theta/2), e^{-i eta} sin(theta/2)).
std::array<Complex, 2> bra_spin(const SpinPost& s) {
    return {Complex{std::cos(0.5 * s.theta), 0.0},
            std::sin(0.5 * s.theta) * std::polar(1.0, -s.eta)};
}

std::vector<Complex> free_phases(const Grid& grid, double t, const PhysConfig& cfg) {
    const std::size_t n = grid.points;
    const double dk = std::numbers::pi / grid.half_width;
    const double rate = cfg.hbar * t / (2.0 * cfg.m);
    std::vector<Complex> phases(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double index = j < n / 2 ? static_cast<double>(j)
                                        : static_cast<double>(j) - static_cast<double>(n);
        const double k = index * dk;
        phases[j] = std::polar(1.0, -rate * k * k);
    }
    return phases;
}

}  // namespace

std::vector<double> Grid::positions() const {
    std::vector<double> x(points);
    for (std::size_t j = 0; j < points; ++j) x[j] = position(j);
    return x;
}

void Grid::validate() const {
    if (!(half_width > 0.0) || !std::isfinite(half_width)) throw DomainError("grid half-width must be positive");
    if (points < 1024 || !std::has_single_bit(points)) {
        throw DomainError("grid size must be a power of two >= 1024");
    }
}

bool Grid::resolves(double sigma) const { return sigma >= 3.0 * spacing(); }

bool Grid::satisfies_extent(double sigma, const PhysConfig& cfg, double extent) const {
    const double e = std::max(cfg.x_i, std::abs(extent));
    const double spread = cfg.hbar * cfg.T / (2.0 * cfg.m * sigma);
    return half_width > 4.0 * (e + std::hypot(e, spread));
}

Grid Grid::fitted(double sigma, const PhysConfig& cfg, double extent) {
    cfg.validate();
    if (!(sigma > 0.0)) throw DomainError("grid fitting needs a positive width");
    const double e = std::max(cfg.x_i, std::abs(extent));
    const double spread = cfg.hbar * cfg.T / (2.0 * cfg.m * sigma);
    Grid g;
    g.half_width = 1.05 * 4.0 * (e + std::hypot(e, spread));
    const double needed = std::ceil(2.0 * g.half_width / (sigma / 3.0));
    g.points = std::bit_ceil(std::max<std::size_t>(1024, static_cast<std::size_t>(needed)));
    return g;
}

double GridState::norm() const {
    double sum = 0.0;
    for (const auto& c : components) sum += kernels::norm_sq(c);
    return sum * grid.spacing();
}

GridState make_slit_state(double sigma, bool tagged, const Grid& grid, const PhysConfig& cfg,
                          SlitMask mask) {
    cfg.validate();
    grid.validate();
    require_resolved(grid, sigma, "slit");
    window_around(grid, cfg.x_i, sigma);
    window_around(grid, -cfg.x_i, sigma);

    const bool use_plus = mask != SlitMask::minus_only;
    const bool use_minus = mask != SlitMask::plus_only;
    const std::size_t n = grid.points;

    GridState state{grid, {}};
    state.components.assign(tagged ? 2 : 1, std::vector<Complex>(n, Complex{0.0, 0.0}));
    for (std::size_t j = 0; j < n; ++j) {
        const double x = grid.position(j);
        const double up = use_plus ? gaussian_sample(x, cfg.x_i, sigma) : 0.0;
        const double down = use_minus ? gaussian_sample(x, -cfg.x_i, sigma) : 0.0;
        if (tagged) {
            state.components[0][j] = up;
            state.components[1][j] = down;
        } else {
            state.components[0][j] = up + down;
        }
    }
    const double scale = 1.0 / std::sqrt(state.norm());
    for (auto& c : state.components) kernels::scale(c, scale);
    return state;
}

GridState make_detector_state(double x_f, double sigma_det, const Grid& grid) {
    grid.validate();
    require_resolved(grid, sigma_det, "detector");
    window_around(grid, x_f, sigma_det);
    const double a = gaussian_norm(sigma_det);
    GridState state{grid, {std::vector<Complex>(grid.points)}};
    for (std::size_t j = 0; j < grid.points; ++j) {
        state.components[0][j] = a * gaussian_sample(grid.position(j), x_f, sigma_det);
    }
    return state;
}

GridState propagate(const GridState& state, double t, const PhysConfig& cfg) {
    cfg.validate();
    if (!(t >= 0.0)) throw DomainError("propagate requires t >= 0");
    GridState out = state;
    if (t == 0.0) return out;
    const std::vector<Complex> phases = free_phases(state.grid, t, cfg);
    const double inv_n = 1.0 / static_cast<double>(state.grid.points);
    for (auto& c : out.components) {
        spectral::forward(c);
        kernels::multiply(c, phases);
        spectral::inverse(c);
        kernels::scale(c, inv_n);
    }
    return out;
}

GridState unpropagate(const GridState& state, double t, const PhysConfig& cfg) {
    GridState flipped = state;
    for (auto& c : flipped.components) kernels::conjugate(c);
    GridState out = propagate(flipped, t, cfg);
    for (auto& c : out.components) kernels::conjugate(c);
    return out;
}

Complex detect_amplitude(const GridState& state, double x_f, double sigma_det,
                         const std::optional<SpinPost>& spinor) {
    check_spinor(state, spinor);
    const Grid& grid = state.grid;
    require_resolved(grid, sigma_det, "detector");
    const Window w = window_around(grid, x_f, sigma_det);

    const double a = gaussian_norm(sigma_det);
    std::vector<Complex> detector(w.count);
    for (std::size_t j = 0; j < w.count; ++j) {
        detector[j] = a * gaussian_sample(grid.position(w.first + j), x_f, sigma_det);
    }

    auto project = [&](const std::vector<Complex>& component) {
        const std::span<const Complex> ket{component.data() + w.first, w.count};
        return kernels::inner(detector, ket) * grid.spacing();
    };
    if (!state.tagged()) return project(state.components[0]);
    const auto spin = bra_spin(*spinor);
    return spin[0] * project(state.components[0]) + spin[1] * project(state.components[1]);
}

double fringe_density(const GridState& state_at_T, double x_f, double sigma_slit,
                      double sigma_det, const std::optional<SpinPost>& spinor) {
    const double weight = delta_weight(sigma_slit) * delta_weight(sigma_det);
    return std::norm(detect_amplitude(state_at_T, x_f, sigma_det, spinor)) / (weight * weight);
}

double regularized_amplitude_scale(double sigma_slit, double sigma_det, const PhysConfig& cfg) {
    cfg.validate();
    return std::sqrt(cfg.m / (std::numbers::pi * cfg.hbar * cfg.T)) * delta_weight(sigma_slit) *
           delta_weight(sigma_det);
}

weak::WeakValueResult weak_value_x_from_states(const GridState& forward,
                                               const GridState& backward_detector,
                                               const std::optional<SpinPost>& spinor,
                                               PositionTag tag, double amplitude_scale) {
    check_spinor(forward, spinor);
    if (backward_detector.tagged()) throw DomainError("detector state must be spatial only");
    if (forward.grid.points != backward_detector.grid.points ||
        forward.grid.half_width != backward_detector.grid.half_width) {
        throw DomainError("forward and detector states live on different grids");
    }
    if (!forward.tagged() && tag != PositionTag::none) {
        throw DomainError("spin-tagged position needs a tagged state");
    }

    const std::vector<double> x = forward.grid.positions();
    const auto& bra = backward_detector.components[0];
    const double dx = forward.grid.spacing();

    Complex numerator{0.0, 0.0};
    Complex denominator{0.0, 0.0};
    if (!forward.tagged()) {
        numerator = kernels::inner_weighted(bra, x, forward.components[0]) * dx;
        denominator = kernels::inner(bra, forward.components[0]) * dx;
    } else {
        const auto spin = bra_spin(*spinor);
        for (std::size_t k = 0; k < 2; ++k) {
            denominator += spin[k] * kernels::inner(bra, forward.components[k]) * dx;
            const bool counted = tag == PositionTag::none ||
                                 (tag == PositionTag::plus && k == 0) ||
                                 (tag == PositionTag::minus && k == 1);
            if (counted) {
                numerator += spin[k] * kernels::inner_weighted(bra, x, forward.components[k]) * dx;
            }
        }
    }
    return weak::weak_value_ratio(numerator, denominator, amplitude_scale);
}

weak::WeakValueResult oracle_weak_value_x(double t, const Selection& selection, double sigma,
                                          const Grid& grid, PositionTag tag,
                                          std::optional<double> sigma_det, SlitMask mask) {
    selection.validate();
    const PhysConfig& cfg = selection.cfg;
    if (!(t >= 0.0 && t <= cfg.T)) throw DomainError("oracle_weak_value_x requires 0 <= t <= T");
    const double sd = sigma_det.value_or(sigma);

    const GridState slits = make_slit_state(sigma, selection.spin_post.has_value(), grid, cfg, mask);
    const GridState forward = propagate(slits, t, cfg);
    const GridState backward =
        unpropagate(make_detector_state(selection.x_f, sd, grid), cfg.T - t, cfg);
    return weak_value_x_from_states(forward, backward, selection.spin_post, tag,
                                    regularized_amplitude_scale(sigma, sd, cfg));
}

Complex oracle_weak_value_p(const Selection& selection, double sigma, const Grid& grid, double h,
                            std::optional<double> sigma_det, SlitMask mask) {
    selection.validate();
    const PhysConfig& cfg = selection.cfg;
    const double sd = sigma_det.value_or(sigma);
    const GridState at_screen = propagate(
        make_slit_state(sigma, selection.spin_post.has_value(), grid, cfg, mask), cfg.T, cfg);
    const weak::Amplitude amplitude = [&](double alpha) {
        return detect_amplitude(at_screen, selection.x_f - alpha * cfg.hbar, sd, selection.spin_post);
    };
    return weak::weak_value_from_derivative(amplitude, h);
}

ConvergenceReport convergence_sweep(const SweepSpec& spec, std::span<const double> sigmas,
                                    const std::optional<Grid>& grid, const PhysConfig& cfg,
                                    double extent) {
    ConvergenceReport report;
    report.name = spec.name;
    report.tolerance = spec.tolerance;
    if (sigmas.empty()) throw DomainError("convergence sweep needs at least one width");
    for (std::size_t j = 1; j < sigmas.size(); ++j) {
        if (!(sigmas[j] < sigmas[j - 1])) throw DomainError("sweep widths must decrease");
    }

    bool all_evaluated = true;
    for (double sigma : sigmas) {
        SweepRow row;
        row.sigma = sigma;
        try {
            const Grid g = grid ? *grid : Grid::fitted(sigma, cfg, extent);
            require_resolved(g, sigma, "sweep");
            const Complex v = spec.evaluate(sigma, g);
            row.value = v;
            double err = spec.imaginary_only ? std::abs(v.imag() - spec.reference.imag())
                                             : std::abs(v - spec.reference);
            if (spec.relative) err /= std::abs(spec.reference);
            row.error = err;
        } catch (const std::exception& e) {
            row.failure = e.what();
            all_evaluated = false;
        }
        report.rows.push_back(std::move(row));
    }

    int upward_steps = 0;
    std::optional<double> previous;
    for (const SweepRow& row : report.rows) {
        if (!row.error) continue;
        if (previous && *row.error > *previous) ++upward_steps;
        previous = row.error;
    }
    report.monotone = all_evaluated && upward_steps <= 1;
    const auto& last = report.rows.back();
    report.passed = report.monotone && last.error && *last.error < spec.tolerance;
    return report;
}

}  // namespace weakpath::oracle
