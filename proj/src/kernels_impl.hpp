#pragma once

#include "weakpath/kernels.hpp"

namespace weakpath::kernels::detail {

extern const KernelTable scalar_table;

#if defined(WEAKPATH_HAVE_AVX2)
extern const KernelTable avx2_table;
#endif

}  // namespace weakpath::kernels::detail
