#include "weakpath/doubleslit.hpp"

#include <cmath>
#include <numbers>

#include "weakpath/gaussian.hpp"

namespace weakpath::doubleslit {

namespace {

constexpr double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

void check_theta(double theta) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi)) throw DomainError("theta must lie in [0, pi]");
}

void validate_times(std::span<const double> times, const PhysConfig& cfg) {
    if (times.size() < 2) throw DomainError("trajectory needs at least two time samples");
    if (times.front() != 0.0 || times.back() != cfg.T) {
        throw DomainError("trajectory times must start at 0 and end at T");
    }
    for (std::size_t j = 1; j < times.size(); ++j) {
        if (!(times[j] > times[j - 1])) throw DomainError("trajectory times must be strictly increasing");
    }
}

// tan(path_phase) with the destructive-zero policy: exact zero of cos throws.
double checked_tan(double phase) {
    const double c = std::cos(phase);
    if (c == 0.0) throw SingularTransition("complete destructive interference at this screen position");
    return std::sin(phase) / c;
}

bool plain_near_singular(double phase) {
    return std::abs(std::cos(phase)) < weak::eps_div;
}

// c / (c + s e^{i chi}) and s / (s + c e^{-i chi})
std::array<Complex, 2> tagged_ratios(double theta, double chi) {
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    return {checked_div(c, c + s * std::polar(1.0, chi)),
            checked_div(s, s + c * std::polar(1.0, -chi))};
}

double chi_of(double x_f, double eta, const PhysConfig& cfg) {
    return 2.0 * path_phase(x_f, cfg) - eta;
}

}  // namespace

double path_phase(double x_f, const PhysConfig& cfg) {
    return cfg.m * x_f * cfg.x_i / (cfg.hbar * cfg.T);
}

double amplitude_scale(const PhysConfig& cfg) {
    cfg.validate();
    return std::sqrt(cfg.m / (std::numbers::pi * cfg.hbar * cfg.T));
}

std::vector<double> uniform_times(const PhysConfig& cfg, std::size_t n) {
    cfg.validate();
    if (n < 2) throw DomainError("need at least two time samples");
    std::vector<double> times(n);
    const double last = static_cast<double>(n - 1);
    for (std::size_t j = 0; j < n; ++j) times[j] = cfg.T * (static_cast<double>(j) / last);
    times.back() = cfg.T;
    return times;
}

std::array<Complex, 2> slit_amplitudes(double x_f, double alpha, const PhysConfig& cfg) {
    const double x = x_f - alpha * cfg.hbar;
    return {inv_sqrt2 * free_propagator(x, cfg.x_i, cfg.T, cfg),
            inv_sqrt2 * free_propagator(x, -cfg.x_i, cfg.T, cfg)};
}

std::array<weak::Amplitude, 2> slit_amplitude_functions(double x_f, const PhysConfig& cfg) {
    return {[x_f, cfg](double alpha) { return slit_amplitudes(x_f, alpha, cfg)[0]; },
            [x_f, cfg](double alpha) { return slit_amplitudes(x_f, alpha, cfg)[1]; }};
}

std::array<Complex, 2> tagged_amplitudes(double x_f, double theta, double eta,
                                         const PhysConfig& cfg) {
    check_theta(theta);
    const auto k = slit_amplitudes(x_f, 0.0, cfg);
    return {std::cos(0.5 * theta) * k[0],
            std::sin(0.5 * theta) * std::polar(1.0, -eta) * k[1]};
}

double fringe_probability(double x_f, const PhysConfig& cfg) {
    cfg.validate();
    const double c = std::cos(path_phase(x_f, cfg));
    return cfg.m / (std::numbers::pi * cfg.hbar * cfg.T) * c * c;
}

double fringe_probability_gaussian(double x_f, double sigma_slit, double sigma_det,
                                   const PhysConfig& cfg) {
    if (!(sigma_slit > 0.0) || !(sigma_det > 0.0)) {
        throw DomainError("fringe_probability_gaussian requires positive widths");
    }
    const ComplexGaussian detector = gaussian_from_slit(x_f, sigma_det, cfg);
    Complex amplitude{0.0, 0.0};
    for (double x0 : {cfg.x_i, -cfg.x_i}) {
        const ComplexGaussian slit = evolve_gaussian(gaussian_from_slit(x0, sigma_slit, cfg), cfg.T, cfg);
        amplitude += inv_sqrt2 * overlap(detector, slit);
    }
    amplitude /= delta_weight(sigma_slit) * delta_weight(sigma_det);
    return std::norm(amplitude);
}

double tagged_transition_probability(double x_f, double theta, double eta,
                                     const PhysConfig& cfg) {
    const auto k = tagged_amplitudes(x_f, theta, eta, cfg);
    return std::norm(k[0] + k[1]);
}

weak::WeakValueResult momentum_weak_value(double x_f, const PhysConfig& cfg) {
    cfg.validate();
    const double phase = path_phase(x_f, cfg);
    weak::WeakValueResult r;
    r.value = cfg.m * Complex{x_f, cfg.x_i * checked_tan(phase)} / cfg.T;
    r.denom_mag = std::sqrt(fringe_probability(x_f, cfg));
    r.near_singular = plain_near_singular(phase);
    return r;
}

BranchMomenta branch_momentum_weak_values(double x_f, const PhysConfig& cfg) {
    cfg.validate();
    return {cfg.m * (x_f - cfg.x_i) / cfg.T, cfg.m * (x_f + cfg.x_i) / cfg.T};
}

weak::BranchDecomposition momentum_decomposition(double x_f, const PhysConfig& cfg) {
    const auto k = slit_amplitudes(x_f, 0.0, cfg);
    const auto p = branch_momentum_weak_values(x_f, cfg);
    return weak::make_decomposition({k[0], k[1]}, {p.p_plus, p.p_minus});
}

double interference_index_closed(double x_f, const PhysConfig& cfg) {
    cfg.validate();
    return cfg.m * cfg.x_i * checked_tan(path_phase(x_f, cfg)) / cfg.T;
}

ClassicalPair classical_trajectories(double x_f, double t, const PhysConfig& cfg) {
    cfg.validate();
    if (!(t >= 0.0 && t <= cfg.T)) throw DomainError("classical_trajectories requires 0 <= t <= T");
    const double s = t / cfg.T;
    return {cfg.x_i + (x_f - cfg.x_i) * s, -cfg.x_i + (x_f + cfg.x_i) * s};
}

TrajectorySeries weak_trajectory(double x_f, std::span<const double> times,
                                 const PhysConfig& cfg) {
    cfg.validate();
    validate_times(times, cfg);
    const double phase = path_phase(x_f, cfg);
    const double tan_phase = checked_tan(phase);

    TrajectorySeries series;
    series.times.assign(times.begin(), times.end());
    series.values.reserve(times.size());
    for (double t : times) {
        // s = 1 exactly at t = T, pinning the endpoint to x_f + 0i
        const double s = t / cfg.T;
        series.values.emplace_back(x_f * s, cfg.x_i * (s - 1.0) * tan_phase);
    }
    series.transition_probability = fringe_probability(x_f, cfg);
    series.near_singular = plain_near_singular(phase);
    return series;
}

ScaleFactors scale_factors(double x_f, double theta, double eta, const PhysConfig& cfg) {
    cfg.validate();
    check_theta(theta);
    ScaleFactors f;
    f.chi = chi_of(x_f, eta, cfg);
    const double sin_t = std::sin(theta);
    const double cos_t = std::cos(theta);
    const double cos_chi = std::cos(f.chi);
    const double sin_chi = std::sin(f.chi);
    // |c + s e^{i chi}|^2 = 1 + sin(theta) cos(chi)
    const double denom = 1.0 + sin_t * cos_chi;
    if (denom == 0.0) throw SingularTransition("tagged amplitude vanishes: 1 + sin(theta) cos(chi) = 0");
    f.r_plus = (1.0 + cos_t + sin_t * cos_chi) / (2.0 * denom);
    f.r_minus = (1.0 - cos_t + sin_t * cos_chi) / (2.0 * denom);
    f.i_plus = -sin_t * sin_chi / (2.0 * denom);
    f.i_minus = sin_t * sin_chi / (2.0 * denom);
    return f;
}

weak::BranchDecomposition tagged_position_decomposition(double x_f, double theta, double eta,
                                                        double t, const PhysConfig& cfg) {
    const auto k = tagged_amplitudes(x_f, theta, eta, cfg);
    const auto cl = classical_trajectories(x_f, t, cfg);
    return weak::make_decomposition({k[0], k[1]}, {cl.x_plus, cl.x_minus});
}

TaggedTrajectories tagged_weak_trajectories(double x_f, double theta, double eta,
                                            std::span<const double> times,
                                            const PhysConfig& cfg) {
    cfg.validate();
    check_theta(theta);
    validate_times(times, cfg);
    const auto ratio = tagged_ratios(theta, chi_of(x_f, eta, cfg));

    const auto k = tagged_amplitudes(x_f, theta, eta, cfg);
    const Complex total = k[0] + k[1];
    if (total == Complex{0.0, 0.0}) throw SingularTransition("tagged transition amplitude vanishes");
    const double prob = std::norm(total);
    const bool near_singular = std::abs(total) < weak::eps_div * amplitude_scale(cfg);

    TaggedTrajectories out;
    for (TrajectorySeries* s : {&out.plus, &out.minus}) {
        s->times.assign(times.begin(), times.end());
        s->values.reserve(times.size());
        s->transition_probability = prob;
        s->near_singular = near_singular;
    }
    for (double t : times) {
        const auto cl = classical_trajectories(x_f, t, cfg);
        out.plus.values.push_back(cl.x_plus * ratio[0]);
        out.minus.values.push_back(cl.x_minus * ratio[1]);
    }
    return out;
}

TrajectorySeries normalized_tagged_branch(double x_f, double theta, double eta,
                                          std::span<const double> times, bool plus,
                                          const PhysConfig& cfg) {
    const ScaleFactors f = scale_factors(x_f, theta, eta, cfg);
    const double r = plus ? f.r_plus : f.r_minus;
    if (std::abs(r) <= scale_factor_floor) {
        throw NormalizationUndefined(plus ? "R+ vanishes; normalized S+ trajectory undefined"
                                          : "R- vanishes; normalized S- trajectory undefined");
    }
    TaggedTrajectories raw = tagged_weak_trajectories(x_f, theta, eta, times, cfg);
    TrajectorySeries series = plus ? std::move(raw.plus) : std::move(raw.minus);
    for (Complex& v : series.values) v /= r;
    return series;
}

TaggedTrajectories normalized_tagged_trajectories(double x_f, double theta, double eta,
                                                  std::span<const double> times,
                                                  const PhysConfig& cfg) {
    return {normalized_tagged_branch(x_f, theta, eta, times, true, cfg),
            normalized_tagged_branch(x_f, theta, eta, times, false, cfg)};
}

}  // namespace weakpath::doubleslit
