#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "approx.hpp"
#include "weakpath/doubleslit.hpp"
#include "weakpath/weak.hpp"

using namespace weakpath;
using namespace weakpath::weak;
using std::numbers::pi;

TEST_CASE("weak_value_ratio") {
    const auto r = weak_value_ratio({1, 0}, {1, 0}, 1.0);
    CHECK_CLOSE(r.value, 1.0, 0.0);
    CHECK_FALSE(r.near_singular);
    CHECK_THROWS_AS(weak_value_ratio({1, 0}, {0, 0}, 1.0), SingularTransition);
    const auto tiny = weak_value_ratio({1, 0}, {1e-10, 0}, 1.0);
    CHECK(tiny.near_singular);
    CHECK_CLOSE(tiny.value, 1e10, 1e-3);
}

TEST_CASE("weak value of p from the double-slit amplitudes") {
    // <x_f| p U(T) |phi> = -i hbar d/dx_f <x_f| U(T) |phi>
    const PhysConfig cfg;
    const double x = 0.5;
    const double h = 1e-5;
    const auto amp = [&](double xf) {
        const auto k = doubleslit::slit_amplitudes(xf, 0.0, cfg);
        return k[0] + k[1];
    };
    const Complex num = -I * cfg.hbar * (amp(x + h) - amp(x - h)) / (2 * h);
    const auto r = weak_value_ratio(num, amp(x), doubleslit::amplitude_scale(cfg));
    CHECK_CLOSE(r.value, Complex(0.5, std::tan(0.5)), 1e-8);
    CHECK_CLOSE(r.value, Complex(0.5, 0.54630), 1e-5);
    CHECK_FALSE(r.near_singular);
}

TEST_CASE("weak_value_from_derivative") {
    for (Complex c : {Complex(0.3, 0.0), Complex(-1.2, 0.7), Complex(2.0, -3.0)}) {
        const Amplitude k = [c](double a) { return std::exp(-I * c * a); };
        CHECK_CLOSE(weak_value_from_derivative(k), c, 1e-11);
    }
    const Amplitude flat = [](double) { return Complex(2.0, -1.0); };
    CHECK_CLOSE(weak_value_from_derivative(flat), 0.0, 1e-15);

    const PhysConfig cfg;
    const auto k = doubleslit::slit_amplitude_functions(0.5, cfg);
    const Amplitude total = [&](double a) { return k[0](a) + k[1](a); };
    CHECK_CLOSE(weak_value_from_derivative(total, 1e-3),
                doubleslit::momentum_weak_value(0.5, cfg).value, 1e-8);

    const Amplitude zero = [](double) { return Complex(0.0, 0.0); };
    CHECK_THROWS_AS(weak_value_from_derivative(zero), SingularTransition);
    CHECK_THROWS_AS(weak_value_from_derivative(flat, 0.0), DomainError);
}

TEST_CASE("decompose_probability") {
    const double r = 1.0 / std::sqrt(2.0);
    const std::vector<Amplitude> same{[r](double) { return Complex(r, 0); }, [r](double) { return Complex(r, 0); }};
    auto split = decompose_probability(same, 0.0);
    CHECK(split.diagonal == doctest::Approx(1.0));
    CHECK(split.offdiagonal == doctest::Approx(1.0));

    const std::vector<Amplitude> opposite{[](double) { return Complex(0.3, 0.2); },
                                          [](double) { return Complex(-0.3, -0.2); }};
    split = decompose_probability(opposite, 0.0);
    CHECK(split.offdiagonal == doctest::Approx(-split.diagonal));
    CHECK(split.diagonal + split.offdiagonal == doctest::Approx(0.0));

    const PhysConfig cfg;
    const auto k = doubleslit::slit_amplitude_functions(0.5, cfg);
    split = decompose_probability(k, 0.0);
    CHECK(split.diagonal == doctest::Approx(1.0 / (2 * pi)).epsilon(1e-14));
    CHECK(split.offdiagonal == doctest::Approx(std::cos(1.0) / (2 * pi)).epsilon(1e-14));
    CHECK(split.diagonal + split.offdiagonal ==
          doctest::Approx(doubleslit::fringe_probability(0.5, cfg)).epsilon(1e-14));

    CHECK_THROWS_AS(decompose_probability(std::span<const Amplitude>(k.data(), 1), 0.0), DomainError);
}

TEST_CASE("interference index from its definition") {
    const PhysConfig cfg;
    CHECK(interference_index_definition(doubleslit::slit_amplitude_functions(0.5, cfg)) ==
          doctest::Approx(std::tan(0.5)).epsilon(1e-9));
    CHECK(std::abs(interference_index_definition(doubleslit::slit_amplitude_functions(0.0, cfg))) < 1e-12);
    // a lone non-trivial branch has no off-diagonal part
    const std::vector<Amplitude> single{[](double a) { return std::exp(-I * 0.7 * a); },
                                        [](double) { return Complex(0.0, 0.0); }};
    CHECK(std::abs(interference_index_definition(single)) < 1e-12);
}

TEST_CASE("interference index gap form") {
    const PhysConfig cfg;
    const auto d = doubleslit::momentum_decomposition(0.5, cfg);
    const Complex total = total_weak_value(d);
    CHECK_CLOSE(total, doubleslit::momentum_weak_value(0.5, cfg).value, 1e-14);
    CHECK(interference_index_gap(total, d) == doctest::Approx(std::tan(0.5)).epsilon(1e-13));
    // real branch values: the gap reduces to Im A_w
    CHECK(interference_index_gap(total, d) == doctest::Approx(total.imag()).epsilon(1e-13));

    const auto lone = make_decomposition({Complex(0.4, 0.1)}, {Complex(2.0, 0.5)});
    CHECK(std::abs(interference_index_gap(total_weak_value(lone), lone)) < 1e-15);
}

TEST_CASE("interference index off-diagonal form") {
    const PhysConfig cfg;
    CHECK(interference_index_offdiagonal(doubleslit::momentum_decomposition(0.5, cfg)) ==
          doctest::Approx(std::tan(0.5)).epsilon(1e-13));
    CHECK(std::abs(interference_index_offdiagonal(doubleslit::momentum_decomposition(0.0, cfg))) < 1e-15);
    const auto real = make_decomposition({Complex(0.5, 0), Complex(0.5, 0)}, {Complex(1, 0), Complex(-3, 0)});
    CHECK(interference_index_offdiagonal(real) == 0.0);
}

TEST_CASE("decomposition properties") {
    const auto d = make_decomposition({Complex(1, 0), Complex(-1, 1e-3)}, {Complex(0.2, 0), Complex(1, 0)});
    double sum = 0.0;
    for (double p : d.relative_probabilities) sum += p;
    // Pi_k need not sum to 1 once branches interfere
    CHECK(sum > 1e5);
    CHECK_THROWS_AS(make_decomposition({Complex(1, 0), Complex(-1, 0)}, {Complex(0, 0), Complex(0, 0)}),
                    SingularTransition);
    CHECK_THROWS_AS(make_decomposition({Complex(1, 0)}, {}), DomainError);
    CHECK_THROWS_AS(make_decomposition({}, {}), DomainError);
}

TEST_CASE("index forms agree for random branches and are order invariant") {
    // deterministic pseudo-random branch sets with three branches
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    const auto next = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return static_cast<double>(state % 20001) / 10000.0 - 1.0;
    };
    for (int trial = 0; trial < 50; ++trial) {
        std::array<Complex, 3> k0, c;
        for (int j = 0; j < 3; ++j) {
            k0[j] = {next(), next()};
            c[j] = {2 * next(), 0.5 * next()};
        }
        std::vector<Amplitude> branches;
        for (int j = 0; j < 3; ++j) {
            branches.push_back([k = k0[j], cj = c[j]](double a) { return k * std::exp(-I * cj * a); });
        }
        const auto d = make_decomposition({k0.begin(), k0.end()}, {c.begin(), c.end()});
        const double gap = interference_index_gap(total_weak_value(d), d);
        const double off = interference_index_offdiagonal(d);
        const double def = interference_index_definition(branches, 1e-4);
        const double scale = std::max(1.0, std::abs(gap));
        CHECK(std::abs(gap - off) <= 1e-10 * scale);
        CHECK(std::abs(def - gap) <= 1e-5 * scale);

        const auto rev = make_decomposition({k0[2], k0[0], k0[1]}, {c[2], c[0], c[1]});
        CHECK(interference_index_gap(total_weak_value(rev), rev) == doctest::Approx(gap).epsilon(1e-12));
        CHECK(interference_index_offdiagonal(rev) == doctest::Approx(off).epsilon(1e-12));
    }
}
