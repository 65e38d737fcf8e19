#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "weakpath/core.hpp"
#include "weakpath/oracle.hpp"

// Oracle-versus-closed-form suite behind `weakpath verify`.

namespace weakpath::verify {

struct Options {
    PhysConfig cfg;
    double sigma = oracle::default_sigma;
    std::optional<double> sigma_det;
    std::optional<std::size_t> grid_n;
    std::optional<double> grid_l;
    std::vector<double> sweep_sigmas{0.1, 0.05, 0.02, 0.01};
};

struct Check {
    std::string name;
    std::string what;
    double measured = 0.0;
    double tolerance = 0.0;
    /// "<": measured must stay below tolerance; ">" or ">=": at or above it.
    std::string relation = "<";
    bool passed = false;
    std::string note;
};

struct Report {
    std::vector<Check> checks;
    std::vector<oracle::ConvergenceReport> sweeps;

    bool passed() const;
};

/// Oracle lattice for the options: fitted to the narrower regularization
/// width unless --grid-n / --grid-l override it.
oracle::Grid oracle_grid(const Options& options);

Report run(const Options& options);

void print_text(const Report& report, std::ostream& os);
void write_json(const Report& report, std::ostream& os);

}  // namespace weakpath::verify
