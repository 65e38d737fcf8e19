#pragma once

#include <filesystem>
#include <iosfwd>
#include <numbers>
#include <optional>
#include <vector>

#include "weakpath/core.hpp"
#include "weakpath/table.hpp"
#include "weakpath/verify.hpp"

// Dataset builders behind the weakpath subcommands.

namespace weakpath::cli {

/// Inclusive sweep min, min + step, ... up to max (within rounding).
struct Range {
    double min = -3.0;
    double max = 3.0;
    double step = 0.01;

    /// Throws DomainError for step <= 0, max < min or non-finite bounds.
    void validate() const;
    /// Values are min + k step; values within rounding of zero print as 0.
    std::vector<double> values() const;
};

struct RunConfig {
    PhysConfig cfg;
    std::optional<std::filesystem::path> out;
    io::Format format = io::Format::csv;
    Range xf;
    std::vector<double> thetas{0.0, std::numbers::pi / 2, std::numbers::pi};
    double eta = 0.0;
    std::optional<double> sigma_slit;
    std::optional<double> sigma_det;
    std::size_t nt = 101;
    std::optional<std::size_t> grid_n;
    std::optional<double> grid_l;

    void validate() const;
};

/// Default x_f sweeps per command.
Range fringe_range();
Range weakp_range();
Range traj_range();
Range tagged_range();

io::Table cmd_fringe(const RunConfig& run);
io::Table cmd_weakp(const RunConfig& run);
io::Table cmd_traj(const RunConfig& run);
io::Table cmd_tagged(const RunConfig& run);

verify::Options verify_options(const RunConfig& run);

}  // namespace weakpath::cli
