#include "weakpath/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <new>
#include <stdexcept>
#include <mutex>
#include <utility>

namespace weakpath::spectral {

namespace {

struct FftwFree {
    void operator()(fftw_complex* p) const { fftw_free(p); }
};
using Buffer = std::unique_ptr<fftw_complex[], FftwFree>;

Buffer allocate(std::size_t n) {
    Buffer b{fftw_alloc_complex(n)};
    if (!b) throw std::bad_alloc();
    return b;
}

// Plans are created once per (length, sign) under a lock; fftw_execute_dft
// on a cached plan is reentrant.
fftw_plan plan_for(std::size_t n, int sign) {
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, int>, fftw_plan> plans;
    const std::lock_guard lock(mutex);
    auto it = plans.find({n, sign});
    if (it != plans.end()) return it->second;
    Buffer scratch = allocate(n);
    fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n), scratch.get(), scratch.get(), sign,
                                   FFTW_ESTIMATE);
    if (p == nullptr) throw std::runtime_error("FFTW failed to create a plan");
    plans.emplace(std::pair{n, sign}, p);
    return p;
}

void transform(std::span<Complex> data, int sign) {
    const std::size_t n = data.size();
    if (n == 0 || !std::has_single_bit(n)) throw DomainError("DFT length must be a power of two");
    fftw_plan p = plan_for(n, sign);
    // Aligned copy keeps the plan's SIMD codelets valid for any caller buffer.
    Buffer work = allocate(n);
    auto* w = reinterpret_cast<Complex*>(work.get());
    std::copy(data.begin(), data.end(), w);
    fftw_execute_dft(p, work.get(), work.get());
    std::copy(w, w + n, data.begin());
}

}  // namespace

void forward(std::span<Complex> data) { transform(data, FFTW_FORWARD); }

void inverse(std::span<Complex> data) { transform(data, FFTW_BACKWARD); }

}  // namespace weakpath::spectral
