#include "weakpath/commands.hpp"

#include <cmath>

#include "weakpath/doubleslit.hpp"
#include "weakpath/errors.hpp"

namespace weakpath::cli {

namespace ds = weakpath::doubleslit;
using io::Cell;

void Range::validate() const {
    if (!std::isfinite(min) || !std::isfinite(max) || !std::isfinite(step)) {
        throw DomainError("x_f range must be finite");
    }
    if (step <= 0.0) throw DomainError("x_f step must be positive");
    if (max < min) throw DomainError("x_f range is empty (max < min)");
}

std::vector<double> Range::values() const {
    validate();
    // tolerate the rounding in (max - min) / step so max itself is included
    const auto count = static_cast<std::size_t>(std::floor((max - min) / step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        double v = min + static_cast<double>(k) * step;
        if (std::abs(v) < 1e-9 * step) v = 0.0;
        out.push_back(v);
    }
    return out;
}

void RunConfig::validate() const {
    cfg.validate();
    xf.validate();
    if (nt < 2) throw DomainError("--nt needs at least 2 time samples");
    for (double theta : thetas) {
        if (!(theta >= 0.0 && theta <= std::numbers::pi)) throw DomainError("theta must lie in [0, pi]");
    }
    if (!std::isfinite(eta)) throw DomainError("eta must be finite");
    for (const auto& s : {sigma_slit, sigma_det}) {
        if (s && !(*s > 0.0 && std::isfinite(*s))) throw DomainError("Gaussian widths must be positive");
    }
    if (grid_l && !(*grid_l > 0.0)) throw DomainError("--grid-l must be positive");
}

Range fringe_range() { return {-3.0, 3.0, 0.01}; }
Range weakp_range() { return {-3.0, 3.0, 0.01}; }
Range traj_range() { return {-3.0, 3.0, 0.05}; }
Range tagged_range() { return {-3.0, 3.0, 0.1}; }

io::Table cmd_fringe(const RunConfig& run) {
    run.validate();
    io::Table table;
    table.columns = {"x_f", "prob_point"};
    if (run.sigma_slit) table.columns.emplace_back("prob_gaussian");
    for (double x : run.xf.values()) {
        std::vector<Cell> row{x, ds::fringe_probability(x, run.cfg)};
        if (run.sigma_slit) {
            row.emplace_back(ds::fringe_probability_gaussian(x, *run.sigma_slit,
                                                             run.sigma_det.value_or(*run.sigma_slit), run.cfg));
        }
        table.add_row(std::move(row));
    }
    return table;
}

io::Table cmd_weakp(const RunConfig& run) {
    run.validate();
    io::Table table;
    table.columns = {"x_f", "re_pw", "im_pw", "p_plus", "p_minus", "index", "near_singular"};
    for (double x : run.xf.values()) {
        const auto branches = ds::branch_momentum_weak_values(x, run.cfg);
        try {
            const auto pw = ds::momentum_weak_value(x, run.cfg);
            table.add_row({x, pw.value.real(), pw.value.imag(), branches.p_plus, branches.p_minus,
                           ds::interference_index_closed(x, run.cfg), pw.near_singular ? 1.0 : 0.0});
        } catch (const SingularTransition&) {
            table.add_row({x, {}, {}, branches.p_plus, branches.p_minus, {}, 1.0});
        }
    }
    return table;
}

io::Table cmd_traj(const RunConfig& run) {
    run.validate();
    io::Table table;
    table.columns = {"x_f", "t", "re_x", "im_x", "prob"};
    const auto times = ds::uniform_times(run.cfg, run.nt);
    for (double x : run.xf.values()) {
        const double prob = ds::fringe_probability(x, run.cfg);
        try {
            const auto series = ds::weak_trajectory(x, times, run.cfg);
            for (std::size_t j = 0; j < times.size(); ++j) {
                table.add_row({x, times[j], series.values[j].real(), series.values[j].imag(), prob});
            }
        } catch (const SingularTransition&) {
            for (double t : times) table.add_row({x, t, {}, {}, prob});
        }
    }
    return table;
}

io::Table cmd_tagged(const RunConfig& run) {
    run.validate();
    io::Table table;
    table.columns = {"x_f",   "theta", "eta",        "t",          "re_xp", "im_xp",
                     "re_xm", "im_xm", "re_xp_norm", "re_xm_norm", "prob"};
    const auto times = ds::uniform_times(run.cfg, run.nt);
    for (double theta : run.thetas) {
        for (double x : run.xf.values()) {
            const double prob = ds::tagged_transition_probability(x, theta, run.eta, run.cfg);
            std::optional<ds::TaggedTrajectories> tr;
            std::optional<ds::ScaleFactors> f;
            try {
                tr = ds::tagged_weak_trajectories(x, theta, run.eta, times, run.cfg);
                f = ds::scale_factors(x, theta, run.eta, run.cfg);
            } catch (const SingularTransition&) {
                tr.reset();
            }
            for (std::size_t j = 0; j < times.size(); ++j) {
                std::vector<Cell> row{x, theta, run.eta, times[j]};
                if (tr) {
                    const Complex xp = tr->plus.values[j];
                    const Complex xm = tr->minus.values[j];
                    row.insert(row.end(), {xp.real(), xp.imag(), xm.real(), xm.imag()});
                    row.push_back(std::abs(f->r_plus) > ds::scale_factor_floor ? Cell{xp.real() / f->r_plus}
                                                                               : Cell{});
                    row.push_back(std::abs(f->r_minus) > ds::scale_factor_floor ? Cell{xm.real() / f->r_minus}
                                                                                : Cell{});
                } else {
                    row.insert(row.end(), 6, Cell{});
                }
                row.push_back(prob);
                table.add_row(std::move(row));
            }
        }
    }
    return table;
}

verify::Options verify_options(const RunConfig& run) {
    run.cfg.validate();
    verify::Options o;
    o.cfg = run.cfg;
    if (run.sigma_slit) o.sigma = *run.sigma_slit;
    o.sigma_det = run.sigma_det;
    o.grid_n = run.grid_n;
    o.grid_l = run.grid_l;
    return o;
}

}  // namespace weakpath::cli
