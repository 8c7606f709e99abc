#include "doctest.h"
#include "helpers.hpp"
#include "qclock/errors.hpp"
#include "qclock/groupstruct.hpp"

using namespace qclock;
using namespace testing;

TEST_CASE("make_clock(1) is trivial") {
    const ClockStructures cs = make_clock(1);
    CHECK(cs.group_mult == Matrix{{1.0}});
    CHECK(cs.time_copy == Matrix{{1.0}});
    CHECK(cs.antipode == Matrix{{1.0}});
    CHECK(verify_strong_complementarity(cs).passed());
}

TEST_CASE("group multiplication adds mod N") {
    const ClockStructures cs2 = make_clock(2);
    CHECK(cs2.group_mult * tensor(ket(2, 1), ket(2, 1)) == ket(2, 0));
    const ClockStructures cs3 = make_clock(3);
    CHECK(cs3.antipode * ket(3, 1) == ket(3, 2));
    for (int N = 1; N <= 7; ++N) {
        const ClockStructures cs = make_clock(N);
        for (int s = 0; s < N; ++s) {
            const Vector es = ket(N, s);
            CHECK(cs.time_copy * es == tensor(es, es));
            CHECK((cs.time_delete * es)[0] == Complex(1.0));
            CHECK(cs.antipode * es == ket(N, (N - s) % N));
            for (int t = 0; t < N; ++t) {
                CHECK(cs.group_mult * tensor(es, ket(N, t)) == ket(N, (s + t) % N));
            }
        }
        CHECK(cs.group_unit.col(0) == ket(N, 0));
    }
}

TEST_CASE("make_clock rejects bad sizes") {
    CHECK_THROWS_AS(make_clock(0), InvalidArgument);
    CHECK_THROWS_AS(make_clock(-3), InvalidArgument);
    CHECK_THROWS_AS(make_clock(200), InvalidArgument);
}

TEST_CASE("character vectors") {
    CHECK(character_vector({4, 0}) == Vector{1.0, 1.0, 1.0, 1.0});
    CHECK(character_vector({4, 1}) == Vector{1.0, I, -1.0, -I});
    CHECK(character_vector({2, 1}) == Vector{1.0, -1.0});
    for (int N = 1; N <= 9; ++N) {
        for (int E = 0; E < N; ++E) {
            const Vector chi = character_vector({N, E});
            for (int t = 0; t < N; ++t) {
                CHECK(std::abs(chi[t] - omega(E * t, N)) < 1e-13);
            }
        }
    }
    CHECK_THROWS_AS(character_vector({4, 4}), InvalidArgument);
}

TEST_CASE("multiplicative characters") {
    const ClockStructures cs4 = make_clock(4);
    CHECK(verify_multiplicative_character(cs4, character_vector({4, 1})));
    CHECK_FALSE(verify_multiplicative_character(cs4, Vector{1.0, 1.0, 1.0, 0.0}));
    CHECK(verify_multiplicative_character(make_clock(1), Vector{1.0}));
    CHECK_THROWS_AS(verify_multiplicative_character(cs4, Vector{1.0, 1.0}),
                    DimensionError);
}

TEST_CASE("strong complementarity holds exactly at small N") {
    const Report r2 = verify_strong_complementarity(make_clock(2));
    CHECK(r2.passed());
    CHECK(r2.max_error() == 0.0);
    const Report r6 = verify_strong_complementarity(make_clock(6));
    CHECK(r6.passed());
    CHECK(r6.max_error() < 1e-12);
    for (const char *name :
         {"time.frobenius", "time.special", "group.frobenius", "group.quasi_special",
          "hopf", "bialgebra.mult_copy", "antipode.involution"}) {
        CHECK(r6.contains(name));
    }
}

TEST_CASE("replacing the antipode with the identity breaks the Hopf law") {
    ClockStructures cs = make_clock(3);
    cs.antipode = Matrix::identity(3);
    const Report r = verify_strong_complementarity(cs);
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.at("hopf").passed);
    CHECK(r.at("bialgebra.mult_copy").passed);
}

TEST_CASE("hopf composite on |1> with identity antipode, by hand") {
    // mult(|1>|1>) = |2>, while unit . delete |1> = |0>.
    const ClockStructures cs = make_clock(3);
    const Vector lhs = cs.group_mult * (cs.time_copy * ket(3, 1));
    CHECK(lhs == ket(3, 2));
    CHECK(cs.group_unit * (cs.time_delete * ket(3, 1)) == ket(3, 0));
}

TEST_CASE("character identities") {
    for (int N = 1; N <= 10; ++N) {
        const ClockStructures cs = make_clock(N);
        for (int E = 0; E < N; ++E) {
            const Vector chiE = character_vector({N, E});
            CHECK(max_abs_diff(cs.group_mult * tensor(chiE, chiE),
                               Complex(static_cast<double>(N)) * chiE) < 1e-9);
            CHECK(max_abs_diff(cs.antipode * chiE, character_vector({N, (N - E) % N})) <
                  1e-9);
            for (int F = 0; F < N; ++F) {
                const Vector chiF = character_vector({N, F});
                const Complex ip = inner(chiE, chiF);
                CHECK(std::abs(ip - (E == F ? Complex(N) : Complex(0.0))) < 1e-9);
                CHECK(max_abs_diff(cs.time_match * tensor(chiE, chiF),
                                   character_vector({N, (E + F) % N})) < 1e-9);
            }
        }
    }
}

TEST_CASE("shift and clock matrices") {
    CHECK(shift_matrix(3) * ket(3, 2) == ket(3, 0));
    CHECK(shift_matrix(4, 2) * ket(4, 1) == ket(4, 3));
    CHECK(clock_matrix(2) == pauli_z());
}
