#include "doctest.h"
#include "helpers.hpp"
#include "qclock/errors.hpp"
#include "qclock/histories.hpp"
#include "qclock/random.hpp"

using namespace qclock;
using namespace testing;

namespace {
UnitaryDynamic xx_dynamic() { return dynamic_from_generator(pauli_x(), 2); }
} // namespace

TEST_CASE("history examples") {
    const History h = history_from_state(xx_dynamic(), ket(2, 0));
    CHECK(h.states == std::vector<Vector>{ket(2, 0), ket(2, 1)});
    const Vector psi{0.6, Complex(0.0, 0.8)};
    const History c = history_from_state(trivial_dynamic(2, 3), psi);
    for (const auto &s : c.states) {
        CHECK(s == psi);
    }
    const History k = history_from_state(clock_dynamic(3), ket(3, 0));
    CHECK(k.states == std::vector<Vector>{ket(3, 0), ket(3, 1), ket(3, 2)});
    CHECK_THROWS_AS(history_from_state(xx_dynamic(), ket(3, 0)), DimensionError);
}

TEST_CASE("EM morphism examples") {
    const UnitaryDynamic x = xx_dynamic();
    CHECK(is_em_morphism(history_from_state(x, ket(2, 0)), x).equal);
    History bad{2, 2, {ket(2, 0), ket(2, 0)}};
    CHECK_FALSE(is_em_morphism(bad, x).equal);
    History constant{3, 2, {ket(2, 1), ket(2, 1), ket(2, 1)}};
    CHECK(is_em_morphism(constant, trivial_dynamic(2, 3)).equal);
}

TEST_CASE("Schrodinger examples") {
    const SpectralSolution s = schrodinger_solve(xx_dynamic(), ket(2, 0));
    CHECK(max_abs_diff(s.components[0], Vector{0.5, 0.5}) < 1e-15);
    CHECK(max_abs_diff(s.components[1], Vector{0.5, -0.5}) < 1e-15);
    const History back = reconstruct_history(s);
    CHECK(max_abs_diff(back.states[0], ket(2, 0)) < 1e-15);
    CHECK(max_abs_diff(back.states[1], ket(2, 1)) < 1e-15);

    const Vector psi{0.6, 0.8};
    const SpectralSolution t = schrodinger_solve(trivial_dynamic(2, 4), psi);
    CHECK(max_abs_diff(t.components[0], psi) < 1e-15);
    for (int E = 1; E < 4; ++E) {
        CHECK(t.components[E].max_abs() < 1e-15);
    }

    const UnitaryDynamic d6 = dynamic_from_generator(diag({1.0, omega(2, 6)}), 6);
    const SpectralSolution u = schrodinger_solve(d6, ket(2, 1));
    for (int E = 0; E < 6; ++E) {
        if (E == 2) {
            CHECK(max_abs_diff(u.components[E], ket(2, 1)) < 1e-12);
        } else {
            CHECK(u.components[E].max_abs() < 1e-12);
        }
    }
}

TEST_CASE("zero components reconstruct the zero history") {
    SpectralSolution s{3, 2, {Vector(2), Vector(2), Vector(2)}};
    for (const auto &v : reconstruct_history(s).states) {
        CHECK(v.max_abs() == 0.0);
    }
}

TEST_CASE("histories and spectral solutions on random dynamics") {
    Rng rng(31);
    for (int k = 0; k < 40; ++k) {
        const int N = std::uniform_int_distribution<int>(1, 12)(rng);
        const auto dim = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 5)(rng));
        const UnitaryDynamic d = dynamic_from_generator(random_generator(dim, N, rng).generator, N);
        const Vector psi = random_unit_vector(dim, rng);
        const History h = history_from_state(d, psi);
        CHECK(is_em_morphism(h, d).equal);
        const SpectralSolution s = schrodinger_solve(d, psi);
        Vector sum(dim);
        for (int E = 0; E < N; ++E) {
            sum += s.components[E];
            for (int t = 0; t < N; ++t) {
                CHECK(max_abs_diff(d.at(t) * s.components[E], omega(E * t, N) * s.components[E]) <
                      1e-8);
            }
        }
        CHECK(max_abs_diff(sum, psi) < 1e-9);
        const History back = reconstruct_history(s);
        for (int t = 0; t < N; ++t) {
            CHECK(max_abs_diff(back.states[t], h.states[t]) < 1e-9);
        }
        // Any history passing the EM test is generated by its initial state.
        CHECK(is_em_morphism(back, d, Tolerance(1e-8)).equal);
        const History regen = history_from_state(d, back.states[0]);
        for (int t = 0; t < N; ++t) {
            CHECK(max_abs_diff(regen.states[t], back.states[t]) < 1e-8);
        }
    }
}
