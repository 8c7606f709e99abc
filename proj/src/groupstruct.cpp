#include "qclock/groupstruct.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "qclock/errors.hpp"

namespace qclock {

namespace {

std::size_t pair_index(int N, int s, int t) {
    return static_cast<std::size_t>(s) * static_cast<std::size_t>(N) +
           static_cast<std::size_t>(t);
}

} // namespace

ClockStructures make_clock(int N) {
    if (N < 1) {
        throw InvalidArgument("clock size must be positive, got " +
                              std::to_string(N));
    }
    const auto n = static_cast<std::size_t>(N);
    if (n * n > max_entries() / n) {
        throw InvalidArgument("clock size " + std::to_string(N) +
                              " exceeds the configured entry cap");
    }

    ClockStructures cs;
    cs.N = N;
    cs.time_copy = Matrix(n * n, n);
    cs.time_delete = Matrix(1, n);
    cs.time_unit_sum = Matrix(n, 1);
    cs.group_mult = Matrix(n, n * n);
    cs.group_unit = Matrix(n, 1);
    cs.group_counit = Matrix(1, n);
    cs.antipode = Matrix(n, n);

    for (int t = 0; t < N; ++t) {
        cs.time_copy(pair_index(N, t, t), t) = 1.0;
        cs.time_delete(0, t) = 1.0;
        cs.time_unit_sum(t, 0) = 1.0;
        cs.antipode(mod(-t, N), t) = 1.0;
        for (int s = 0; s < N; ++s) {
            cs.group_mult(mod(s + t, N), pair_index(N, s, t)) = 1.0;
        }
    }
    cs.group_unit(0, 0) = 1.0;
    cs.group_counit(0, 0) = 1.0;
    cs.time_match = dagger(cs.time_copy);
    cs.group_comult = dagger(cs.group_mult);
    return cs;
}

Vector character_vector(Character c) {
    if (c.N < 1 || c.E < 0 || c.E >= c.N) {
        throw InvalidArgument("character label must satisfy 0 <= E < N");
    }
    Vector v(static_cast<std::size_t>(c.N));
    for (int t = 0; t < c.N; ++t) {
        v[t] = root_of_unity(static_cast<long long>(c.E) * t, c.N);
    }
    return v;
}

Matrix shift_matrix(int N, int t) {
    if (N < 1) {
        throw InvalidArgument("shift_matrix: N must be positive");
    }
    Matrix s(N, N);
    for (int r = 0; r < N; ++r) {
        s(mod(r + t, N), r) = 1.0;
    }
    return s;
}

Matrix clock_matrix(int N, int E) {
    if (N < 1) {
        throw InvalidArgument("clock_matrix: N must be positive");
    }
    Matrix m(N, N);
    for (int t = 0; t < N; ++t) {
        m(t, t) = root_of_unity(static_cast<long long>(E) * t, N);
    }
    return m;
}

bool verify_multiplicative_character(const ClockStructures &cs, const Vector &v,
                                     Tolerance tol) {
    if (v.dim() != static_cast<std::size_t>(cs.N)) {
        throw DimensionError("character candidate has dimension " +
                             std::to_string(v.dim()) + ", clock has N = " +
                             std::to_string(cs.N));
    }
    const Matrix effect = Matrix::bra(v);
    const double mult_err =
        max_abs_diff(effect * cs.group_mult, tensor(effect, effect));
    const double unit_err =
        max_abs_diff(effect * cs.group_unit, Matrix::identity(1));
    return mult_err <= tol.eps() && unit_err <= tol.eps();
}

Report verify_strong_complementarity(const ClockStructures &cs, Tolerance tol) {
    const auto n = static_cast<std::size_t>(cs.N);
    const double bound = tol.eps();
    const Matrix id = Matrix::identity(n);
    const Matrix one = Matrix::identity(1);
    const std::array<std::size_t, 2> two_legs{n, n};
    const std::array<std::size_t, 2> flip{1, 0};

    Report r;

    auto comonoid_laws = [&](const std::string &prefix, const Matrix &mult,
                             const Matrix &unit, const Matrix &comult,
                             const Matrix &counit) {
        const Vector unit_state = unit.col(0);
        r.add(prefix + ".comult_is_adjoint", max_abs_diff(comult, dagger(mult)),
              bound);
        r.add(prefix + ".counit_is_adjoint", max_abs_diff(counit, dagger(unit)),
              bound);
        r.add(prefix + ".associative",
              column_residual(
                  n * n * n, [&](const Vector &e) { return mult * apply_kron(mult, id, e); },
                  [&](const Vector &e) { return mult * apply_kron(id, mult, e); }),
              bound);
        const double unit_err = std::max(
            column_residual(
                n, [&](const Vector &e) { return mult * tensor(unit_state, e); },
                [](const Vector &e) { return e; }),
            column_residual(
                n, [&](const Vector &e) { return mult * tensor(e, unit_state); },
                [](const Vector &e) { return e; }));
        r.add(prefix + ".unit", unit_err, bound);
        r.add(prefix + ".commutative",
              column_residual(
                  n * n,
                  [&](const Vector &e) {
                      return mult * permute_legs(e, two_legs, flip);
                  },
                  [&](const Vector &e) { return mult * e; }),
              bound);
        auto middle = [&](const Vector &e) { return comult * (mult * e); };
        const double frob_err = std::max(
            column_residual(
                n * n,
                [&](const Vector &e) {
                    return apply_kron(id, mult, apply_kron(comult, id, e));
                },
                middle),
            column_residual(
                n * n,
                [&](const Vector &e) {
                    return apply_kron(mult, id, apply_kron(id, comult, e));
                },
                middle));
        r.add(prefix + ".frobenius", frob_err, bound);
    };

    comonoid_laws("time", cs.time_match, cs.time_unit_sum, cs.time_copy,
                  cs.time_delete);
    r.add("time.special", max_abs_diff(cs.time_match * cs.time_copy, id), bound);

    comonoid_laws("group", cs.group_mult, cs.group_unit, cs.group_comult,
                  cs.group_counit);
    r.add("group.quasi_special",
          max_abs_diff(cs.group_mult * cs.group_comult,
                       Complex(static_cast<double>(cs.N)) * id),
          bound, "mult . comult = N * I");

    r.add("hopf",
          column_residual(
              n,
              [&](const Vector &e) {
                  return cs.group_mult *
                         apply_kron(cs.antipode, id, cs.time_copy * e);
              },
              [&](const Vector &e) {
                  return cs.group_unit * (cs.time_delete * e);
              }),
          bound);

    const std::array<std::size_t, 4> four_legs{n, n, n, n};
    const std::array<std::size_t, 4> middle_swap{0, 2, 1, 3};
    r.add("bialgebra.mult_copy",
          column_residual(
              n * n,
              [&](const Vector &e) { return cs.time_copy * (cs.group_mult * e); },
              [&](const Vector &e) {
                  const Vector copied = apply_kron(cs.time_copy, cs.time_copy, e);
                  return apply_kron(cs.group_mult, cs.group_mult,
                                    permute_legs(copied, four_legs, middle_swap));
              }),
          bound);
    r.add("bialgebra.unit_copy",
          max_abs_diff(cs.time_copy * cs.group_unit,
                       tensor(cs.group_unit, cs.group_unit)),
          bound);
    r.add("bialgebra.mult_delete",
          max_abs_diff(cs.time_delete * cs.group_mult,
                       tensor(cs.time_delete, cs.time_delete)),
          bound);
    r.add("bialgebra.scalar",
          max_abs_diff(cs.time_delete * cs.group_unit, one), bound);

    r.add("antipode.involution",
          max_abs_diff(cs.antipode * cs.antipode, id), bound);
    r.add("antipode.self_adjoint", max_abs_diff(cs.antipode, dagger(cs.antipode)),
          bound);

    double conj_err = 0.0;
    for (int E = 0; E < cs.N; ++E) {
        const Vector chi = character_vector({cs.N, E});
        conj_err = std::max(conj_err, max_abs_diff(cs.antipode * chi, conj(chi)));
    }
    r.add("antipode.conjugates_characters", conj_err, bound);
    return r;
}

} // namespace qclock
