// Acceptance suite: one PASS/FAIL line per criterion, tolerances pinned here.
// Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include <boost/math/tools/minima.hpp>

#include "weakpath/doubleslit.hpp"
#include "weakpath/oracle.hpp"
#include "weakpath/weak.hpp"

#ifndef WEAKPATH_CLI_PATH
#error "WEAKPATH_CLI_PATH must name the weakpath executable"
#endif

namespace {

using namespace weakpath;
using namespace weakpath::doubleslit;
using std::numbers::pi;

// Criterion 1 lattice and width, as pinned by the criterion.
constexpr double c1_sigma = 0.02;
constexpr double c1_half_width = 30.0;
constexpr std::size_t c1_points = std::size_t{1} << 14;
constexpr double c1_rel_tol = 1e-3;

constexpr double c2a_tol = 1e-8;
constexpr double c2_step = 1e-3;
constexpr double c2b_tol = 1e-3;
constexpr double c3_real_tol = 1e-3;
constexpr double c3_imag_final_tol = 1e-3;
constexpr double c4_closed_tol = 1e-9;
constexpr double c4_numeric_tol = 1e-4;
// x_w(T) = x_f + 0i is checked bitwise. Re x_w = mean of the classical lines
// holds exactly in arithmetic, but the mean is formed with about three
// roundings of operands bounded by |x_f| + |x_i|; the bound is 4 eps of that.
constexpr double c5_exact_tol = 0.0;
constexpr double c5_mean_eps = 4.0;
constexpr double c5_oracle_tol = 1e-2;
constexpr double c6_tol = 1e-10;
constexpr double c7_anchor_tol = 1e-14;
constexpr double c7_form_tol = 1e-12;
constexpr double c8_tol = 1e-12;
constexpr double c9_tol = 1e-12;
constexpr double c10_zero_tol = 1e-12;
constexpr double c10_positive_tol = 1e-6;
constexpr double c12_tol = 1e-12;

// Neighbourhoods of destructive zeros, where rounding is amplified by the
// vanishing amplitude: plain selections with |cos| below the first bound,
// tagged ones with 1 + sin(theta) cos(chi) below the second.
constexpr double plain_zero_exclusion = 0.2;
constexpr double tagged_zero_exclusion = 0.05;

const std::vector<double> c2_points{0.0, 0.3, -0.3, 0.5, -0.5, 0.8, -0.8};
const std::vector<double> sweep_sigmas{0.1, 0.05, 0.02, 0.01};

struct Outcome {
    bool passed = false;
    std::string detail;
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string below(const std::string& what, double measured, double tol, bool& ok) {
    const bool pass = std::isfinite(measured) && measured < tol;
    ok = ok && pass;
    return what + " " + sci(measured) + (pass ? " < " : " >= ") + sci(tol);
}

std::string at_most(const std::string& what, double measured, double tol, bool& ok) {
    const bool pass = std::isfinite(measured) && measured <= tol;
    ok = ok && pass;
    return what + " " + sci(measured) + (pass ? " <= " : " > ") + sci(tol);
}

std::vector<double> steps(double lo, double hi, double step) {
    std::vector<double> out;
    const auto n = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
    for (int k = 0; k <= n; ++k) {
        const double v = lo + k * step;
        out.push_back(std::abs(v) < 1e-12 ? 0.0 : v);
    }
    return out;
}

Selection plain(double x_f, const PhysConfig& cfg) {
    Selection s;
    s.x_f = x_f;
    s.cfg = cfg;
    return s;
}

oracle::Grid default_grid(const PhysConfig& cfg) {
    return oracle::Grid::fitted(oracle::default_sigma, cfg, 1.2);
}

// 1. Fringe law against the lattice at sigma = 0.02, L = 30, N = 2^14.
Outcome criterion_1(const PhysConfig& cfg) {
    const oracle::Grid grid{c1_half_width, c1_points};
    const auto screen = oracle::propagate(oracle::make_slit_state(c1_sigma, false, grid, cfg), cfg.T, cfg);
    const auto density = [&](double x) { return oracle::fringe_density(screen, x, c1_sigma, c1_sigma); };

    double worst = 0.0;
    for (double x : steps(-1.4, 1.4, 0.1)) {
        worst = std::max(worst, std::abs(density(x) - fringe_probability(x, cfg)) / fringe_probability(x, cfg));
    }
    const double unit = cfg.hbar * cfg.T / (cfg.m * cfg.x_i);
    double zero_err = 0.0;
    for (double n : {-1.0, 0.0}) {
        const double zero = (pi / 2 + n * pi) * unit;
        const auto found = boost::math::tools::brent_find_minima(density, zero - 0.25 * pi * unit,
                                                                 zero + 0.25 * pi * unit, 40);
        zero_err = std::max(zero_err, std::abs(found.first - zero));
    }
    bool ok = true;
    std::string d = below("max rel err", worst, c1_rel_tol, ok) + "; " +
                    at_most("zero offset", zero_err, grid.spacing(), ok);
    return {ok, d};
}

// Same comparison on the default oracle lattice, printed for context only.
std::string criterion_1_context(const PhysConfig& cfg) {
    const double s = oracle::default_sigma;
    const oracle::Grid grid = default_grid(cfg);
    const auto screen = oracle::propagate(oracle::make_slit_state(s, false, grid, cfg), cfg.T, cfg);
    double worst = 0.0;
    for (double x : steps(-1.4, 1.4, 0.1)) {
        const double ref = fringe_probability(x, cfg);
        worst = std::max(worst, std::abs(oracle::fringe_density(screen, x, s, s) - ref) / ref);
    }
    return "sigma=" + sci(s) + " L=" + sci(grid.half_width) + " N=" + std::to_string(grid.points) +
           ": max rel err " + sci(worst);
}

// 2. Momentum weak value: derivative of the closed-form K(alpha), and the lattice.
Outcome criterion_2(const PhysConfig& cfg) {
    double worst_a = 0.0, worst_b = 0.0;
    const oracle::Grid grid = default_grid(cfg);
    for (double x : c2_points) {
        const Complex closed = momentum_weak_value(x, cfg).value;
        const auto k = slit_amplitude_functions(x, cfg);
        const weak::Amplitude total = [&](double a) { return k[0](a) + k[1](a); };
        worst_a = std::max(worst_a, std::abs(weak::weak_value_from_derivative(total, c2_step) - closed));
        worst_b = std::max(worst_b, std::abs(oracle::oracle_weak_value_p(plain(x, cfg), oracle::default_sigma, grid,
                                                                         c2_step) - closed));
    }
    bool ok = true;
    std::string d = "(a) " + below("abs err", worst_a, c2a_tol, ok) + "; (b) " +
                    below("abs err", worst_b, c2b_tol, ok);
    return {ok, d};
}

// 3. Single-slit momentum: real parts on the lattice, imaginary parts under the sweep.
Outcome criterion_3(const PhysConfig& cfg) {
    const oracle::Grid grid = default_grid(cfg);
    double worst_real = 0.0;
    for (double x : c2_points) {
        const auto exact = branch_momentum_weak_values(x, cfg);
        for (auto [mask, ref] : {std::pair{oracle::SlitMask::plus_only, exact.p_plus},
                                 std::pair{oracle::SlitMask::minus_only, exact.p_minus}}) {
            const Complex p = oracle::oracle_weak_value_p(plain(x, cfg), oracle::default_sigma, grid, c2_step,
                                                          std::nullopt, mask);
            worst_real = std::max(worst_real, std::abs(p.real() - ref));
        }
    }
    bool ok = true;
    std::string d = below("max |Re - m(x_f -+ x_i)/T|", worst_real, c3_real_tol, ok);
    for (auto mask : {oracle::SlitMask::plus_only, oracle::SlitMask::minus_only}) {
        for (double x : {0.5, -0.8}) {
            const Selection sel = plain(x, cfg);
            oracle::SweepSpec spec{
                "imag",
                [sel, mask](double s, const oracle::Grid& g) {
                    return oracle::oracle_weak_value_p(sel, s, g, c2_step, std::nullopt, mask);
                },
                Complex{0.0, 0.0}, c3_imag_final_tol, false, true};
            const auto report = oracle::convergence_sweep(spec, sweep_sigmas, std::nullopt, cfg, 1.2);
            const bool strictly = [&] {
                for (std::size_t j = 1; j < report.rows.size(); ++j) {
                    if (!report.rows[j].error || !report.rows[j - 1].error ||
                        !(*report.rows[j].error < *report.rows[j - 1].error)) {
                        return false;
                    }
                }
                return true;
            }();
            ok = ok && report.passed && strictly;
            if (mask == oracle::SlitMask::plus_only && x == 0.5) {
                d += "; |Im p_+| at x_f=0.5:";
                for (const auto& r : report.rows) d += " " + (r.error ? sci(*r.error) : std::string("n/a"));
            }
            if (!report.passed || !strictly) d += "; sweep not converging at x_f=" + sci(x);
        }
    }
    return {ok, d};
}

// 4. Index forms pairwise over the sweep [-3, 3] step 0.01, flagged rows excluded.
Outcome criterion_4(const PhysConfig& cfg) {
    double worst_closed = 0.0, worst_numeric = 0.0;
    std::size_t used = 0;
    for (double x : steps(-3.0, 3.0, 0.01)) {
        const auto pw = momentum_weak_value(x, cfg);
        if (pw.near_singular) continue;
        ++used;
        const auto decomp = momentum_decomposition(x, cfg);
        const std::vector<double> forms{interference_index_closed(x, cfg),
                                        weak::interference_index_gap(pw.value, decomp),
                                        weak::interference_index_offdiagonal(decomp), pw.value.imag()};
        for (std::size_t i = 0; i < forms.size(); ++i) {
            for (std::size_t j = i + 1; j < forms.size(); ++j) {
                worst_closed = std::max(worst_closed, std::abs(forms[i] - forms[j]));
            }
        }
        const double def = weak::interference_index_definition(slit_amplitude_functions(x, cfg), c2_step);
        for (double f : forms) worst_numeric = std::max(worst_numeric, std::abs(def - f));
    }
    bool ok = used > 0;
    std::string d = std::to_string(used) + " points; closed " + below("max pair diff", worst_closed, c4_closed_tol, ok) +
                    "; definition " + below("max diff", worst_numeric, c4_numeric_tol, ok);
    return {ok, d};
}

// 5. Weak trajectory: boundary, mean of classical lines, lattice at interior times.
Outcome criterion_5(const PhysConfig& cfg) {
    const auto times = uniform_times(cfg);
    double boundary = 0.0, mean_ulps = 0.0;
    for (double x : steps(-3.0, 3.0, 0.05)) {
        const auto s = weak_trajectory(x, times, cfg);
        boundary = std::max(boundary, std::abs(s.values.back() - Complex{x, 0.0}));
        for (std::size_t j = 0; j < times.size(); ++j) {
            const auto cl = classical_trajectories(x, times[j], cfg);
            const double mean = 0.5 * (cl.x_plus + cl.x_minus);
            const double unit = std::numeric_limits<double>::epsilon() * (std::abs(x) + std::abs(cfg.x_i));
            mean_ulps = std::max(mean_ulps, std::abs(s.values[j].real() - mean) / unit);
        }
    }
    const oracle::Grid grid = default_grid(cfg);
    const std::vector<double> interior{0.2 * cfg.T, 0.4 * cfg.T, 0.6 * cfg.T, 0.8 * cfg.T};
    std::vector<double> closed_times{0.0};
    closed_times.insert(closed_times.end(), interior.begin(), interior.end());
    closed_times.push_back(cfg.T);
    double worst = 0.0;
    for (double x : c2_points) {
        const auto closed = weak_trajectory(x, closed_times, cfg);
        for (std::size_t j = 0; j < interior.size(); ++j) {
            const auto w = oracle::oracle_weak_value_x(interior[j], plain(x, cfg), oracle::default_sigma, grid);
            worst = std::max(worst, std::abs(w.value - closed.values[j + 1]));
        }
    }
    bool ok = true;
    std::string d = at_most("|x_w(T) - x_f|", boundary, c5_exact_tol, ok) + "; " +
                    at_most("|Re x_w - mean| / (eps (|x_f| + |x_i|))", mean_ulps, c5_mean_eps, ok) + "; " +
                    below("oracle abs err", worst, c5_oracle_tol, ok);
    return {ok, d};
}

// 6. m dx_w/dt = p_w along the closed-form trajectory.
Outcome criterion_6(const PhysConfig& cfg) {
    const auto times = uniform_times(cfg);
    double worst = 0.0;
    for (double x : steps(-3.0, 3.0, 0.05)) {
        const auto pw = momentum_weak_value(x, cfg);
        if (pw.near_singular) continue;
        const auto s = weak_trajectory(x, times, cfg);
        for (std::size_t j = 0; j + 1 < times.size(); ++j) {
            const Complex v = cfg.m * (s.values[j + 1] - s.values[j]) / (times[j + 1] - times[j]);
            worst = std::max(worst, std::abs(v - pw.value));
        }
    }
    bool ok = true;
    std::string d = below("max |m dx_w/dt - p_w|", worst, c6_tol, ok);
    return {ok, d};
}

// 7. Scale-factor anchors and derived forms against direct complex division.
Outcome criterion_7(const PhysConfig& cfg) {
    double anchors = 0.0;
    for (double x : {0.0, 0.3, 0.5, -0.8, 1.2}) {
        for (double eta : {0.0, pi / 3, 1.0}) {
            const auto f0 = scale_factors(x, 0.0, eta, cfg);
            const auto fh = scale_factors(x, pi / 2, eta, cfg);
            const auto fp = scale_factors(x, pi, eta, cfg);
            anchors = std::max({anchors, std::abs(f0.r_plus - 1.0), std::abs(fp.r_plus), std::abs(fh.r_plus - 0.5),
                                std::abs(f0.r_minus), std::abs(fp.r_minus - 1.0), std::abs(fh.r_minus - 0.5)});
        }
    }
    double forms = 0.0;
    std::size_t used = 0;
    for (int a = 0; a <= 32; ++a) {
        const double theta = pi * a / 32;
        for (int b = 0; b < 64; ++b) {
            const double chi = 2 * pi * b / 64;
            if (1.0 + std::sin(theta) * std::cos(chi) < 1e-6) continue;
            ++used;
            const auto f = scale_factors(0.0, theta, -chi, cfg);
            const double c = std::cos(theta / 2), s = std::sin(theta / 2);
            const Complex plus = c / (c + s * std::polar(1.0, chi));
            const Complex minus = s / (s + c * std::polar(1.0, -chi));
            const double scale = std::max({1.0, std::abs(plus), std::abs(minus)});
            forms = std::max({forms, std::abs(Complex(f.r_plus, f.i_plus) - plus) / scale,
                              std::abs(Complex(f.r_minus, f.i_minus) - minus) / scale});
        }
    }
    bool ok = true;
    std::string d = below("anchors", anchors, c7_anchor_tol, ok) + "; " + std::to_string(used) + " theta x chi points " +
                    below("rel diff", forms, c7_form_tol, ok);
    return {ok, d};
}

// 8. Normalized tagged trajectories follow the classical lines.
Outcome criterion_8(const PhysConfig& cfg) {
    const auto times = uniform_times(cfg);
    double worst = 0.0;
    std::size_t skipped = 0;
    for (double x : steps(-3.0, 3.0, 0.1)) {
        for (double theta : {pi / 4, pi / 2, 3 * pi / 4}) {
            for (double eta : {0.0, pi / 3}) {
                const double chi = 2 * path_phase(x, cfg) - eta;
                if (1.0 + std::sin(theta) * std::cos(chi) < tagged_zero_exclusion) {
                    ++skipped;
                    continue;
                }
                const auto n = normalized_tagged_trajectories(x, theta, eta, times, cfg);
                for (std::size_t j = 0; j < times.size(); ++j) {
                    const auto cl = classical_trajectories(x, times[j], cfg);
                    worst = std::max({worst, std::abs(n.plus.values[j].real() - cl.x_plus),
                                      std::abs(n.minus.values[j].real() - cl.x_minus)});
                }
            }
        }
    }
    bool ok = true;
    std::string d = below("max |Re x~ - x_cl|", worst, c8_tol, ok) + "; " + std::to_string(skipped) +
                    " selections near a tagged zero excluded";
    return {ok, d};
}

// 9. x+_w + x-_w against the weak value of x assembled from the tagged branches.
Outcome criterion_9(const PhysConfig& cfg) {
    const auto times = uniform_times(cfg, 21);
    double worst = 0.0;
    std::size_t skipped = 0;
    for (double x : steps(-3.0, 3.0, 0.1)) {
        for (double theta : {0.0, pi / 4, pi / 2, 3 * pi / 4, pi}) {
            for (double eta : {0.0, pi / 3}) {
                const double chi = 2 * path_phase(x, cfg) - eta;
                if (1.0 + std::sin(theta) * std::cos(chi) < tagged_zero_exclusion) {
                    ++skipped;
                    continue;
                }
                const auto tr = tagged_weak_trajectories(x, theta, eta, times, cfg);
                for (std::size_t j = 0; j < times.size(); ++j) {
                    const Complex total =
                        weak::total_weak_value(tagged_position_decomposition(x, theta, eta, times[j], cfg));
                    const Complex sum = tr.plus.values[j] + tr.minus.values[j];
                    worst = std::max(worst, std::abs(sum - total));
                }
            }
        }
    }
    bool ok = true;
    std::string d = below("max abs diff", worst, c9_tol, ok) + "; " + std::to_string(skipped) +
                    " selections near a tagged zero excluded";
    return {ok, d};
}

double fringe_variance(double theta, double eta, const PhysConfig& cfg) {
    const double period = pi * cfg.hbar * cfg.T / (cfg.m * cfg.x_i);
    constexpr int samples = 64;
    double mean = 0.0, sq = 0.0;
    for (int j = 0; j < samples; ++j) {
        const double p = tagged_transition_probability(period * j / samples, theta, eta, cfg);
        mean += p;
        sq += p * p;
    }
    mean /= samples;
    return std::max(0.0, sq / samples - mean * mean);
}

// 10. Fringe variance of the tagged probability: none with full which-path
// information, some once it is erased.
Outcome criterion_10(const PhysConfig& cfg) {
    double which = 0.0;
    for (double eta : {0.0, pi / 3}) which = std::max({which, fringe_variance(0.0, eta, cfg), fringe_variance(pi, eta, cfg)});
    const double erased = std::min(fringe_variance(pi / 2, 0.0, cfg), fringe_variance(pi / 2, pi / 3, cfg));
    bool ok = true;
    std::string d = below("variance at theta=0,pi", which, c10_zero_tol, ok);
    const bool positive = erased > c10_positive_tol;
    ok = ok && positive;
    d += "; variance at theta=pi/2 " + sci(erased) + (positive ? " > " : " <= ") + sci(c10_positive_tol);
    return {ok, d};
}

// 11. Divergence at the destructive zero x_f = pi/2.
Outcome criterion_11(const PhysConfig& cfg) {
    const std::vector<double> times{0.0, cfg.T};
    const double zero = pi / 2;
    bool increasing = true;
    double previous = 0.0;
    for (int k = 3; k <= 10; ++k) {
        const double im = std::abs(weak_trajectory(zero - std::ldexp(1.0, -k), times, cfg).values[0].imag());
        if (k > 3 && !(im > previous)) increasing = false;
        previous = im;
    }
    bool flips = true;
    for (double d : {1e-1, 1e-3, 1e-6}) {
        const double lo = weak_trajectory(zero - d, times, cfg).values[0].imag();
        const double hi = weak_trajectory(zero + d, times, cfg).values[0].imag();
        flips = flips && lo * hi < 0.0;
    }
    // flagged within eps_div of the zero, not at the sampled points above
    bool flagged = true;
    for (double d : {-0.5e-8, 1e-10, 0.5e-8}) flagged = flagged && weak_trajectory(zero + d, times, cfg).near_singular;
    bool clear = true;
    for (int k = 3; k <= 10; ++k) clear = clear && !weak_trajectory(zero - std::ldexp(1.0, -k), times, cfg).near_singular;
    const bool ok = increasing && flips && flagged && clear;
    const auto yn = [](bool b) { return b ? "yes" : "no"; };
    return {ok, std::string("|Im x_w(0)| increasing: ") + yn(increasing) + "; sign change: " + yn(flips) +
                    "; flagged near zero: " + yn(flagged) + "; unflagged on sweep: " + yn(clear)};
}

// 12. Pi_+ + Pi_- = 1/(2 cos^2) and 1/2 at the centre.
Outcome criterion_12(const PhysConfig& cfg) {
    double worst = 0.0;
    for (double x : steps(-3.0, 3.0, 0.01)) {
        const double c = std::cos(path_phase(x, cfg));
        if (std::abs(c) < plain_zero_exclusion) continue;
        const auto d = momentum_decomposition(x, cfg);
        const double expected = 1.0 / (2 * c * c);
        worst = std::max(worst, std::abs(d.relative_probabilities[0] + d.relative_probabilities[1] - expected));
    }
    const auto centre = momentum_decomposition(0.0, cfg);
    const double at0 = std::abs(centre.relative_probabilities[0] + centre.relative_probabilities[1] - 0.5);
    bool ok = true;
    std::string d = below("max abs diff", worst, c12_tol, ok) + "; " + below("|sum - 1/2| at x_f=0", at0, c12_tol, ok);
    return {ok, d};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + WEAKPATH_CLI_PATH + "\" " + args;
    const int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// 13. Byte-identical datasets across two runs; verify passes on defaults.
Outcome criterion_13() {
    const auto dir = std::filesystem::temp_directory_path() /
                     ("weakpath-acceptance-" + std::to_string(static_cast<long>(::getpid())));
    std::filesystem::create_directories(dir);
    bool ok = true;
    std::string d;
    for (const std::string cmd : {"fringe", "weakp", "traj", "tagged"}) {
        for (const std::string fmt : {"csv", "json"}) {
            const auto a = dir / (cmd + "_a." + fmt);
            const auto b = dir / (cmd + "_b." + fmt);
            const int ra = run_cli("--format " + fmt + " --out \"" + a.string() + "\" " + cmd);
            const int rb = run_cli("--format " + fmt + " --out \"" + b.string() + "\" " + cmd);
            const std::string sa = slurp(a), sb = slurp(b);
            const bool same = ra == 0 && rb == 0 && !sa.empty() && sa == sb;
            ok = ok && same;
            d += cmd + "/" + fmt + (same ? " identical (" + std::to_string(sa.size()) + " B); " : " DIFFERENT; ");
        }
    }
    const int rv = run_cli("verify --out \"" + (dir / "verify.json").string() + "\" > \"" +
                           (dir / "verify.txt").string() + "\"");
    ok = ok && rv == 0;
    d += "verify exit " + std::to_string(rv);
    std::filesystem::remove_all(dir);
    return {ok, d};
}

}  // namespace

int main() {
    const PhysConfig cfg;
    struct Criterion {
        int id;
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "fringe law vs lattice (sigma=0.02, L=30, N=2^14)", [&] { return criterion_1(cfg); }},
        {2, "momentum weak value: K(alpha) derivative and lattice", [&] { return criterion_2(cfg); }},
        {3, "single-slit branch momenta", [&] { return criterion_3(cfg); }},
        {4, "interference index forms agree", [&] { return criterion_4(cfg); }},
        {5, "weak trajectory boundary, mean and lattice", [&] { return criterion_5(cfg); }},
        {6, "m dx_w/dt = p_w", [&] { return criterion_6(cfg); }},
        {7, "scale factors", [&] { return criterion_7(cfg); }},
        {8, "normalized tagged trajectories", [&] { return criterion_8(cfg); }},
        {9, "tagged sum rule", [&] { return criterion_9(cfg); }},
        {10, "which-path / fringe complementarity", [&] { return criterion_10(cfg); }},
        {11, "divergence structure", [&] { return criterion_11(cfg); }},
        {12, "Pi sum", [&] { return criterion_12(cfg); }},
        {13, "determinism and verify on defaults", [] { return criterion_13(); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.passed) ++failed;
        std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " -- " << o.detail
                  << std::endl;
        if (c.id == 1) {
            try {
                std::cout << "     info: default oracle lattice " << criterion_1_context(cfg) << std::endl;
            } catch (const std::exception& e) {
                std::cout << "     info: " << e.what() << std::endl;
            }
        }
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size()
              << " acceptance criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
