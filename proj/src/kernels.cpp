#include <array>
#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace weakpath::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(WEAKPATH_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

struct Registry {
    std::array<const KernelTable*, 2> tables{};
    std::size_t count = 0;
    const KernelTable* active = nullptr;

    Registry() {
        tables[count++] = &detail::scalar_table;
#if defined(WEAKPATH_HAVE_AVX2)
        if (cpu_has_avx2()) tables[count++] = &detail::avx2_table;
#endif
        active = tables[count - 1];
        if (const char* force = std::getenv("WEAKPATH_KERNELS")) {
            if (std::string_view{force} == "scalar") active = &detail::scalar_table;
        }
    }
};

const Registry& registry() {
    static const Registry r;
    return r;
}

void require_same(std::size_t a, std::size_t b) {
    if (a != b) throw DomainError("kernel operands differ in length");
}

}  // namespace

const KernelTable& scalar() { return detail::scalar_table; }

const KernelTable* avx2() {
    const Registry& r = registry();
    for (std::size_t j = 0; j < r.count; ++j) {
        if (std::string_view{r.tables[j]->name} == "avx2") return r.tables[j];
    }
    return nullptr;
}

std::span<const KernelTable* const> available() {
    const Registry& r = registry();
    return {r.tables.data(), r.count};
}

const KernelTable& active() { return *registry().active; }

void multiply(std::span<Complex> a, std::span<const Complex> b) {
    require_same(a.size(), b.size());
    active().multiply(a, b);
}

void scale(std::span<Complex> a, double s) { active().scale(a, s); }

void conjugate(std::span<Complex> a) { active().conjugate(a); }

Complex inner(std::span<const Complex> bra, std::span<const Complex> ket) {
    require_same(bra.size(), ket.size());
    return active().inner(bra, ket);
}

Complex inner_weighted(std::span<const Complex> bra, std::span<const double> w,
                       std::span<const Complex> ket) {
    require_same(bra.size(), ket.size());
    require_same(bra.size(), w.size());
    return active().inner_weighted(bra, w, ket);
}

double norm_sq(std::span<const Complex> a) { return active().norm_sq(a); }

}  // namespace weakpath::kernels
