#include "weakpath/selection.hpp"

#include <cmath>
#include <numbers>

namespace weakpath {

void Selection::validate() const {
    cfg.validate();
    if (!std::isfinite(x_f)) throw DomainError("screen position must be finite");
    if (slit_sigma && !(*slit_sigma > 0.0)) throw DomainError("slit_sigma must be positive");
    if (spin_post) {
        const double theta = spin_post->theta;
        const double eta = spin_post->eta;
        if (!(theta >= 0.0 && theta <= std::numbers::pi)) throw DomainError("theta must lie in [0, pi]");
        if (!std::isfinite(eta)) throw DomainError("eta must be finite");
    }
}

}  // namespace weakpath
