#include <functional>

#include "doctest.h"
#include "helpers.hpp"
#include "qclock/errors.hpp"
#include "qclock/random.hpp"
#include "qclock/syncclock.hpp"

using namespace qclock;
using namespace testing;

namespace {

UnitaryDynamic xx_dynamic() { return dynamic_from_generator(pauli_x(), 2); }

/// Sum over all energy tuples with the given total, by enumeration.
Vector brute_family(const std::vector<UnitaryDynamic> &ds, const std::vector<Vector> &psis,
                    int chi) {
    const int N = ds.front().N;
    std::size_t total = 1;
    for (const auto &d : ds) {
        total *= d.dim;
    }
    Vector acc(total);
    std::vector<int> E(ds.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == ds.size()) {
            int sum = 0;
            for (int e : E) {
                sum += e;
            }
            if (sum % N != chi) {
                return;
            }
            Vector v{1.0};
            for (std::size_t i = 0; i < ds.size(); ++i) {
                v = tensor(v, spectral_projector(ds[i], E[i]) * psis[i]);
            }
            acc += v;
            return;
        }
        for (int e = 0; e < N; ++e) {
            E[j] = e;
            rec(j + 1);
        }
    };
    rec(0);
    return acc;
}

bool closed_under_addition(int N, unsigned mask) {
    for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) {
            if ((mask >> a & 1u) && (mask >> b & 1u) && !(mask >> ((a + b) % N) & 1u)) {
                return false;
            }
        }
    }
    return true;
}

UnitaryDynamic z3_in_z6() {
    return dynamic_from_generator(diag({1.0, omega(2, 6), omega(4, 6)}), 6);
}

} // namespace

TEST_CASE("synchronized pair examples") {
    const SyncState s = synchronized_pair(xx_dynamic(), ket(2, 0));
    CHECK(s.factor_dims == std::vector<std::size_t>{2, 2});
    CHECK(s.amplitudes == Vector{1.0, 0.0, 0.0, 1.0});
    const Vector psi{0.6, 0.8};
    CHECK(synchronized_pair(trivial_dynamic(2, 3), psi).amplitudes ==
          tensor(psi, Vector{1.0, 1.0, 1.0}));
    const SyncState cup = synchronized_pair(clock_dynamic(3), ket(3, 0));
    CHECK(cup.amplitudes == make_clock(3).time_copy * Vector{1.0, 1.0, 1.0});
}

TEST_CASE("contracting the clock leg of a pair recovers the history") {
    Rng rng(51);
    const UnitaryDynamic d = dynamic_from_generator(random_generator(3, 5, rng).generator, 5);
    const Vector psi = random_unit_vector(3, rng);
    const SyncState s = synchronized_pair(d, psi);
    for (int t = 0; t < 5; ++t) {
        Vector v(3);
        for (std::size_t h = 0; h < 3; ++h) {
            v[h] = s.amplitudes[h * 5 + t];
        }
        CHECK(max_abs_diff(v, d.at(t) * psi) == 0.0);
    }
}

TEST_CASE("conundrum check") {
    const Report r = conundrum_check(xx_dynamic(), make_clock(2));
    CHECK(r.passed());
    CHECK(r.at("commutators").max_error == 0.0);
    Rng rng(52);
    const UnitaryDynamic d = dynamic_from_generator(random_generator(3, 4, rng).generator, 4);
    const Report q = conundrum_check(d, make_clock(4));
    CHECK(q.passed());
    CHECK(q.at("commutators").max_error == 0.0);
}

TEST_CASE("synchronized family examples") {
    const std::vector<UnitaryDynamic> two{xx_dynamic(), xx_dynamic()};
    const std::vector<Vector> zeros{ket(2, 0), ket(2, 0)};
    const SyncState f = synchronized_family(two, zeros, 1);
    CHECK(max_abs_diff(f.amplitudes, Vector{0.5, 0.0, 0.0, -0.5}) < 1e-12);

    const std::vector<UnitaryDynamic> one{xx_dynamic()};
    const std::vector<Vector> zero{ket(2, 0)};
    CHECK(max_abs_diff(synchronized_family(one, zero, 0).amplitudes, Vector{0.5, 0.5}) <
          1e-12);

    const std::vector<UnitaryDynamic> trivial{trivial_dynamic(2, 3), trivial_dynamic(3, 3)};
    const std::vector<Vector> psis{Vector{0.6, 0.8}, Vector{1.0, 2.0, 3.0}};
    CHECK(max_abs_diff(synchronized_family(trivial, psis, 0).amplitudes,
                       tensor(psis[0], psis[1])) < 1e-12);
    CHECK(synchronized_family(trivial, psis, 1).amplitudes.max_abs() < 1e-12);

    const std::vector<UnitaryDynamic> mixed{xx_dynamic(), trivial_dynamic(2, 3)};
    CHECK_THROWS_AS(synchronized_family(mixed, zeros, 0), DimensionError);
}

TEST_CASE("synchronized family matches brute-force enumeration") {
    Rng rng(53);
    for (int k = 0; k < 20; ++k) {
        const int N = std::uniform_int_distribution<int>(2, 4)(rng);
        const int M = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<UnitaryDynamic> ds;
        std::vector<Vector> psis;
        for (int j = 0; j < M; ++j) {
            const auto dim = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 3)(rng));
            ds.push_back(dynamic_from_generator(random_generator(dim, N, rng).generator, N));
            psis.push_back(random_unit_vector(dim, rng));
        }
        for (int chi = 0; chi < N; ++chi) {
            CHECK(max_abs_diff(synchronized_family(ds, psis, chi).amplitudes,
                               brute_family(ds, psis, chi)) < 1e-12);
        }
    }
}

TEST_CASE("clock energy collapse examples") {
    const std::vector<UnitaryDynamic> two{xx_dynamic(), xx_dynamic()};
    const std::vector<Vector> zeros{ket(2, 0), ket(2, 0)};
    const Contraction c = clock_energy_collapse(two, zeros, 1);
    CHECK(c.residual < 1e-12);
    CHECK(std::abs(c.scale - Complex(2.0)) < 1e-12);
    CHECK(max_abs_diff(c.state.amplitudes, Vector{1.0, 0.0, 0.0, -1.0}) < 1e-12);

    const std::vector<UnitaryDynamic> trivial{trivial_dynamic(2, 3), trivial_dynamic(1, 3)};
    const std::vector<Vector> psis{Vector{0.6, 0.8}, Vector{1.0}};
    const Contraction t = clock_energy_collapse(trivial, psis, 0);
    CHECK(t.residual < 1e-12);
    CHECK(std::abs(t.scale) > 0.5);
}

TEST_CASE("subsystem energy measurement examples") {
    const std::vector<UnitaryDynamic> two{xx_dynamic(), xx_dynamic()};
    const std::vector<Vector> zeros{ket(2, 0), ket(2, 0)};
    const SyncState fam = synchronized_family(two, zeros, 1);
    const Contraction m = subsystem_energy_measure(fam, two, zeros, 1, 1, 1);
    CHECK(m.residual < 1e-12);
    CHECK(max_abs_diff(m.expected.amplitudes, Vector{0.5, 0.5}) < 1e-12);

    const std::vector<UnitaryDynamic> zs{dynamic_from_generator(pauli_z(), 2),
                                         dynamic_from_generator(pauli_z(), 2)};
    const SyncState zf = synchronized_family(zs, zeros, 0);
    CHECK_THROWS_AS(subsystem_energy_measure(zf, zs, zeros, 0, 1, 1), OrthogonalEigenstate);
}

TEST_CASE("conservation of total energy on random families") {
    Rng rng(54);
    for (int k = 0; k < 30; ++k) {
        const int N = std::uniform_int_distribution<int>(2, 4)(rng);
        const int M = std::uniform_int_distribution<int>(2, 3)(rng);
        std::vector<UnitaryDynamic> ds;
        std::vector<Vector> psis;
        for (int j = 0; j < M; ++j) {
            const auto dim = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 3)(rng));
            ds.push_back(dynamic_from_generator(random_generator(dim, N, rng).generator, N));
            psis.push_back(random_unit_vector(dim, rng));
        }
        const int chi = std::uniform_int_distribution<int>(0, N - 1)(rng);
        const Contraction c = clock_energy_collapse(ds, psis, chi);
        CHECK(c.residual < 1e-8);
        if (c.expected.amplitudes.norm() > 1e-6) {
            CHECK(std::abs(c.scale - Complex(N)) < 1e-8);
        }
        const SyncState fam = synchronized_family(ds, psis, chi);
        for (std::size_t j = 0; j < ds.size(); ++j) {
            for (int E = 0; E < N; ++E) {
                if ((spectral_projector(ds[j], E) * psis[j]).norm() < 1e-7) {
                    CHECK_THROWS_AS(subsystem_energy_measure(fam, ds, psis, chi, j, E),
                                    OrthogonalEigenstate);
                    continue;
                }
                CHECK(subsystem_energy_measure(fam, ds, psis, chi, j, E).residual < 1e-8);
            }
        }
    }
}

TEST_CASE("non-degeneracy") {
    CHECK(is_nondegenerate(dynamic_from_generator(diag({1.0, omega(2, 6)}), 6)));
    CHECK_FALSE(is_nondegenerate(trivial_dynamic(2, 3)));
    CHECK(is_nondegenerate(xx_dynamic()));
}

TEST_CASE("demolition Hamiltonian examples") {
    const auto x = demolition_hamiltonian(xx_dynamic());
    REQUIRE(x.size() == 2);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(x[0].E == 0);
    CHECK(max_abs_diff(x[0].eigenvector, Vector{s, s}) < 1e-12);
    CHECK(x[1].E == 1);
    CHECK(max_abs_diff(x[1].eigenvector, Vector{s, -s}) < 1e-12);
    const auto z = demolition_hamiltonian(z3_in_z6());
    REQUIRE(z.size() == 3);
    CHECK(z[0].E == 0);
    CHECK(z[1].E == 2);
    CHECK(z[2].E == 4);
    const auto one = demolition_hamiltonian(trivial_dynamic(1, 4));
    REQUIRE(one.size() == 1);
    CHECK(one[0].E == 0);
    CHECK(std::abs(one[0].eigenvector[0] - Complex(1.0)) < 1e-15);
    CHECK_THROWS_AS(demolition_hamiltonian(trivial_dynamic(2, 3)), Degenerate);
}

TEST_CASE("subgroup criterion agrees with brute-force closure") {
    for (int N = 1; N <= 6; ++N) {
        for (unsigned mask = 1; mask < (1u << N); ++mask) {
            std::vector<int> energies;
            for (int e = 0; e < N; ++e) {
                if (mask >> e & 1u) {
                    energies.push_back(e);
                }
            }
            CHECK(subgroup_generator(N, energies).has_value() ==
                  closed_under_addition(N, mask));
        }
    }
}

TEST_CASE("internal time observable for Z/3 inside Z/6") {
    const InternalClockDescriptor d = internal_time_observable(z3_in_z6());
    CHECK(d.subgroup);
    CHECK(d.g == 2);
    CHECK(d.m == 3);
    CHECK(d.energies == std::vector<int>{0, 2, 4});
    CHECK(d.permutation_error < 1e-9);
    // Oracle: with eigenvectors e_0, e_1, e_2 the internal states are the
    // 3-point Fourier basis, so U_1 = diag(1, w3, w3^2) sends tau to tau + 1.
    const Matrix u1 = diag({1.0, omega(1, 3), omega(2, 3)});
    for (int tau = 0; tau < 3; ++tau) {
        const Vector expected =
            Complex(1.0 / std::sqrt(3.0)) * Vector{1.0, omega(tau, 3), omega(2 * tau, 3)};
        CHECK(max_abs_diff(d.internal_basis[tau], expected) < 1e-12);
        CHECK(max_abs_diff(u1 * d.internal_basis[tau], d.internal_basis[(tau + 1) % 3]) <
              1e-9);
        CHECK(d.quotient(tau + 3) == tau);
    }
    const Json j = to_json(d);
    CHECK(j["subgroup"] == true);
    CHECK(j["m"] == 3);
    CHECK(j["g"] == 2);
}

TEST_CASE("internal time observable negative and regular cases") {
    const UnitaryDynamic d = dynamic_from_generator(diag({1.0, I}), 4);
    CHECK_THROWS_AS(internal_time_observable(d), NotASubgroup);
    const InternalClockDescriptor desc = describe_internal_clock(d);
    CHECK_FALSE(desc.subgroup);
    CHECK(to_json(desc)["m"].is_null());
    for (int N = 1; N <= 6; ++N) {
        const InternalClockDescriptor c = internal_time_observable(clock_dynamic(N));
        CHECK(c.m == N);
        CHECK(c.g == 1);
        CHECK(c.permutation_error < 1e-9);
    }
    CHECK_THROWS_AS(internal_time_observable(trivial_dynamic(2, 4)), Degenerate);
}

TEST_CASE("internal time basis is orthonormal for random nondegenerate dynamics") {
    Rng rng(55);
    for (int k = 0; k < 10; ++k) {
        const Matrix v = haar_unitary(3, rng);
        const Matrix g = v * diag({1.0, omega(2, 6), omega(4, 6)}) * dagger(v);
        const InternalClockDescriptor d =
            internal_time_observable(dynamic_from_generator(g, 6));
        CHECK(d.permutation_error < 1e-9);
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                CHECK(std::abs(inner(d.internal_basis[a], d.internal_basis[b]) -
                               Complex(a == b ? 1.0 : 0.0)) < 1e-9);
            }
        }
    }
}

TEST_CASE("descent onto the clock itself is trivial") {
    Rng rng(56);
    for (int N : {2, 3, 5}) {
        const UnitaryDynamic dH =
            dynamic_from_generator(random_generator(3, N, rng).generator, N);
        const UnitaryDynamic v = dynamic_descent(clock_dynamic(N), dH, 0);
        CHECK(max_family_diff(v, dH) < 1e-10);
    }
}

TEST_CASE("descent of a phase onto Z/3") {
    const UnitaryDynamic dH = dynamic_from_generator(Matrix{{omega(2, 6)}}, 6);
    const UnitaryDynamic v = dynamic_descent(z3_in_z6(), dH, 0);
    REQUIRE(v.N == 3);
    for (int t = 0; t < 3; ++t) {
        CHECK(std::abs(v.at(t)(0, 0) - omega(t, 3)) < 1e-12);
    }
}

TEST_CASE("descent on random compatible pairs matches the closed form") {
    Rng rng(57);
    for (int k = 0; k < 10; ++k) {
        const Matrix w = haar_unitary(3, rng);
        const UnitaryDynamic dG =
            dynamic_from_generator(w * diag({1.0, omega(2, 6), omega(4, 6)}) * dagger(w), 6);
        const int chi = std::uniform_int_distribution<int>(0, 5)(rng);
        const std::size_t dim = 3;
        const Matrix basis = haar_unitary(dim, rng);
        std::vector<int> levels;
        Matrix phases(dim, dim);
        for (std::size_t j = 0; j < dim; ++j) {
            levels.push_back((chi + 2 * std::uniform_int_distribution<int>(0, 2)(rng)) % 6);
            phases(j, j) = omega(levels.back(), 6);
        }
        const UnitaryDynamic dH =
            dynamic_from_generator(basis * phases * dagger(basis), 6);
        const UnitaryDynamic v = dynamic_descent(dG, dH, chi, Tolerance(1e-8));
        CHECK(validate_dynamic(v, make_clock(3), Tolerance(1e-8)).passed());
        for (int tau = 0; tau < 3; ++tau) {
            Matrix d(dim, dim);
            for (std::size_t j = 0; j < dim; ++j) {
                d(j, j) = omega((levels[j] - chi) * tau, 6);
            }
            CHECK(max_abs_diff(v.at(tau), basis * d * dagger(basis)) < 1e-9);
        }
    }
}

TEST_CASE("descent rejects incompatible energies") {
    const UnitaryDynamic dH = dynamic_from_generator(diag({1.0, omega(1, 6)}), 6);
    try {
        dynamic_descent(z3_in_z6(), dH, 0);
        FAIL("expected AxiomsViolated");
    } catch (const AxiomsViolated &e) {
        CHECK(e.residual() > 0.1);
    }
    CHECK_THROWS_AS(dynamic_descent(trivial_dynamic(2, 6), dH, 0), Degenerate);
    CHECK_THROWS_AS(dynamic_descent(dynamic_from_generator(diag({1.0, omega(1, 6)}), 6), dH, 0),
                    NotASubgroup);
}
