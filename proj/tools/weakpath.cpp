// weakpath: figure datasets and oracle verification for the double-slit
// weak-value model.

#include <CLI11.hpp>

#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "weakpath/commands.hpp"
#include "weakpath/errors.hpp"
#include "weakpath/verify.hpp"

namespace {

namespace cli = weakpath::cli;
namespace io = weakpath::io;

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;

void add_range_flags(CLI::App* sub, cli::RunConfig& run) {
    sub->add_option("--xf-min", run.xf.min, "first screen position");
    sub->add_option("--xf-max", run.xf.max, "last screen position");
    sub->add_option("--xf-step", run.xf.step, "screen position step");
}

void add_model_flags(CLI::App* sub, cli::RunConfig& run) {
    sub->add_option("--theta", run.thetas, "spin post-selection polar angle(s) in [0, pi]")->delimiter(',');
    sub->add_option("--eta", run.eta, "spin post-selection phase");
    sub->add_option("--sigma-slit", run.sigma_slit, "Gaussian slit width");
    sub->add_option("--sigma-det", run.sigma_det, "Gaussian detector width (defaults to slit width)");
    sub->add_option("--nt", run.nt, "time samples on [0, T]");
    sub->add_option("--grid-n", run.grid_n, "oracle lattice points (power of two)");
    sub->add_option("--grid-l", run.grid_l, "oracle lattice half width");
}

int run_verify(const cli::RunConfig& run) {
    const auto report = weakpath::verify::run(cli::verify_options(run));
    if (run.format == io::Format::json && !run.out) {
        weakpath::verify::write_json(report, std::cout);
    } else {
        weakpath::verify::print_text(report, std::cout);
    }
    if (run.out) {
        std::ofstream file(*run.out, std::ios::binary | std::ios::trunc);
        if (!file) throw std::runtime_error("cannot open output file " + run.out->string());
        weakpath::verify::write_json(report, file);
        if (!file.flush()) throw std::runtime_error("failed writing output file " + run.out->string());
    }
    return report.passed() ? exit_ok : exit_verify_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weak values, interference indices and weak trajectories for the double slit"};
    app.require_subcommand(1);

    cli::RunConfig run;
    std::string out;
    app.add_option("--m", run.cfg.m, "particle mass");
    app.add_option("--hbar", run.cfg.hbar, "reduced Planck constant");
    app.add_option("--T", run.cfg.T, "flight time from slits to screen");
    app.add_option("--xi", run.cfg.x_i, "slit half separation");
    app.add_option("--out", out, "output file (default stdout)");
    app.add_option("--format", run.format, "csv or json")
        ->transform(CLI::CheckedTransformer(std::map<std::string, io::Format>{{"csv", io::Format::csv},
                                                                              {"json", io::Format::json}}));

    auto* fringe = app.add_subcommand("fringe", "fringe density on the screen");
    auto* weakp = app.add_subcommand("weakp", "momentum weak value, branch values and interference index");
    auto* traj = app.add_subcommand("traj", "weak trajectories x_w(t)");
    auto* tagged = app.add_subcommand("tagged", "spin-tagged weak trajectories");
    auto* verify = app.add_subcommand("verify", "grid oracle vs closed forms");
    for (auto* sub : {fringe, weakp, traj, tagged, verify}) {
        add_range_flags(sub, run);
        add_model_flags(sub, run);
        // global flags are also accepted after the subcommand name
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }
    if (!out.empty()) run.out = out;

    // per-command default sweeps unless set explicitly
    const cli::Range defaults = fringe->parsed() ? cli::fringe_range()
                                : weakp->parsed() ? cli::weakp_range()
                                : traj->parsed()  ? cli::traj_range()
                                                  : cli::tagged_range();
    for (auto* sub : {fringe, weakp, traj, tagged, verify}) {
        if (!sub->parsed()) continue;
        if (sub->count("--xf-min") == 0) run.xf.min = defaults.min;
        if (sub->count("--xf-max") == 0) run.xf.max = defaults.max;
        if (sub->count("--xf-step") == 0) run.xf.step = defaults.step;
    }

    try {
        if (verify->parsed()) return run_verify(run);
        io::Table table;
        if (fringe->parsed()) table = cli::cmd_fringe(run);
        if (weakp->parsed()) table = cli::cmd_weakp(run);
        if (traj->parsed()) table = cli::cmd_traj(run);
        if (tagged->parsed()) table = cli::cmd_tagged(run);
        io::write_table(table, run.format, run.out);
    } catch (const std::exception& e) {
        std::cerr << "weakpath: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_ok;
}
