#pragma once

#include <span>

#include "weakpath/core.hpp"

namespace weakpath::spectral {

/// In-place unnormalized DFT, exponent sign -1. Length must be a power of two.
void forward(std::span<Complex> data);

/// In-place unnormalized inverse DFT, exponent sign +1.
void inverse(std::span<Complex> data);

}  // namespace weakpath::spectral
