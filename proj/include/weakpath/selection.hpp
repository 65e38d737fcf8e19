#pragma once

#include <optional>

#include "weakpath/core.hpp"

namespace weakpath {

/// Spin post-selection cos(theta/2)|+> + e^{i eta} sin(theta/2)|->,
/// the up state along (sin theta cos eta, sin theta sin eta, cos theta).
struct SpinPost {
    double theta = 0.0;
    double eta = 0.0;
};

/// Pre- and post-selection of one double-slit run.
///
/// With spin_post set the pre-selected state is the which-path tagged
/// superposition (|x_i,+> + |-x_i,->)/sqrt2; otherwise it is the plain
/// (|x_i> + |-x_i>)/sqrt2. slit_sigma, when present, regularizes the slits
/// as Gaussians of that spread.
struct Selection {
    double x_f = 0.0;
    std::optional<SpinPost> spin_post;
    std::optional<double> slit_sigma;
    PhysConfig cfg;

    void validate() const;
};

}  // namespace weakpath
