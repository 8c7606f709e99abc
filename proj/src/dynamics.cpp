#include "qclock/dynamics.hpp"

#include <cmath>
#include <string>

#include "qclock/errors.hpp"

namespace qclock {

namespace {

void require_square(const Matrix &m, const std::string &what) {
    if (!m.is_square() || m.rows() == 0) {
        throw DimensionError(what + " must be a non-empty square matrix");
    }
}

/// Uncurried action alpha : H (x) T -> H, column h*N + t equal to U_t e_h.
Matrix uncurry(const UnitaryDynamic &d) {
    const auto n = static_cast<std::size_t>(d.N);
    Matrix alpha(d.dim, d.dim * n);
    for (std::size_t t = 0; t < n; ++t) {
        const Matrix &u = d.unitaries[t];
        for (std::size_t r = 0; r < d.dim; ++r) {
            for (std::size_t h = 0; h < d.dim; ++h) {
                alpha(r, h * n + t) = u(r, h);
            }
        }
    }
    return alpha;
}

} // namespace

UnitaryDynamic dynamic_from_generator(const Matrix &U, int N, Tolerance tol) {
    if (N < 1) {
        throw InvalidArgument("clock size must be positive");
    }
    require_square(U, "generator");
    const double u_err = unitarity_error(U);
    if (!(u_err <= tol.eps())) {
        throw NotUnitary("generator is not unitary (error " +
                         std::to_string(u_err) + ")");
    }
    UnitaryDynamic d;
    d.N = N;
    d.dim = U.rows();
    d.generator = U;
    d.unitaries.reserve(static_cast<std::size_t>(N));
    Matrix p = Matrix::identity(d.dim);
    for (int t = 0; t < N; ++t) {
        d.unitaries.push_back(p);
        p = U * p;
    }
    const double period_err = max_abs_diff(p, Matrix::identity(d.dim));
    if (!(period_err <= tol.eps())) {
        throw NotPeriodic("generator^" + std::to_string(N) +
                          " differs from I by " + std::to_string(period_err));
    }
    return d;
}

UnitaryDynamic dynamic_from_unitaries(std::vector<Matrix> unitaries) {
    if (unitaries.empty()) {
        throw DimensionError("a dynamic needs at least one unitary");
    }
    const std::size_t dim = unitaries.front().rows();
    for (const auto &u : unitaries) {
        require_square(u, "unitary");
        if (u.rows() != dim) {
            throw DimensionError("unitaries have differing dimensions");
        }
    }
    UnitaryDynamic d;
    d.N = static_cast<int>(unitaries.size());
    d.dim = dim;
    d.unitaries = std::move(unitaries);
    return d;
}

UnitaryDynamic clock_dynamic(int N) {
    return dynamic_from_generator(shift_matrix(N), N);
}

UnitaryDynamic trivial_dynamic(std::size_t dim, int N) {
    return dynamic_from_generator(Matrix::identity(dim), N);
}

Report validate_dynamic(const UnitaryDynamic &d, const ClockStructures &cs,
                        Tolerance tol) {
    if (d.N != cs.N) {
        throw DimensionError("dynamic has N = " + std::to_string(d.N) +
                             ", clock has N = " + std::to_string(cs.N));
    }
    if (d.unitaries.size() != static_cast<std::size_t>(d.N)) {
        throw DimensionError("dynamic must hold exactly N unitaries");
    }
    const auto n = static_cast<std::size_t>(cs.N);
    const double bound = tol.eps();
    const Matrix alpha = uncurry(d);
    const Matrix id_h = Matrix::identity(d.dim);
    const Matrix id_t = Matrix::identity(n);

    Report r;
    r.add("unit", max_abs_diff(alpha * tensor(id_h, cs.group_unit), id_h), bound);
    r.add("action",
          column_residual(
              d.dim * n * n,
              [&](const Vector &e) { return alpha * apply_kron(alpha, id_t, e); },
              [&](const Vector &e) {
                  return alpha * apply_kron(id_h, cs.group_mult, e);
              }),
          bound);

    const Matrix controlled = from_column_map(d.dim * n, [&](const Vector &e) {
        return apply_kron(alpha, id_t, apply_kron(id_h, cs.time_copy, e));
    });
    const Matrix inverted_copy = tensor(cs.antipode, id_t) * cs.time_copy;
    const Matrix controlled_inverse =
        from_column_map(d.dim * n, [&](const Vector &e) {
            return apply_kron(alpha, id_t, apply_kron(id_h, inverted_copy, e));
        });
    const Matrix id_ht = Matrix::identity(d.dim * n);
    const Matrix c_dag = dagger(controlled);
    r.add("unitarity.isometry", max_abs_diff(c_dag * controlled, id_ht), bound);
    r.add("unitarity.coisometry", max_abs_diff(controlled * c_dag, id_ht), bound);
    r.add("unitarity.antipode", max_abs_diff(controlled_inverse, c_dag), bound,
          "adjoint equals action through the antipode");
    return r;
}

Matrix spectral_projector(const UnitaryDynamic &d, int E) {
    if (E < 0 || E >= d.N) {
        throw InvalidArgument("energy label must satisfy 0 <= E < N");
    }
    Matrix p(d.dim, d.dim);
    for (int t = 0; t < d.N; ++t) {
        p += std::conj(root_of_unity(static_cast<long long>(E) * t, d.N)) *
             d.unitaries[static_cast<std::size_t>(t)];
    }
    p *= Complex(1.0 / d.N);
    return p;
}

ProjectionSpectrum hamiltonian(const UnitaryDynamic &d) {
    ProjectionSpectrum s;
    s.N = d.N;
    s.dim = d.dim;
    for (int E = 0; E < d.N; ++E) {
        s.projectors.push_back(spectral_projector(d, E));
        if (s.projectors.back().max_abs() > kSupportThreshold) {
            s.support.push_back(E);
        }
    }
    return s;
}

int projector_rank(const Matrix &p) {
    return static_cast<int>(std::lround(p.trace().real()));
}

double completeness_error(const ProjectionSpectrum &s) {
    Matrix sum(s.dim, s.dim);
    for (const auto &p : s.projectors) {
        sum += p;
    }
    return max_abs_diff(sum, Matrix::identity(s.dim));
}

UnitaryDynamic stone_reconstruct(const ProjectionSpectrum &s, Tolerance tol) {
    if (s.projectors.size() != static_cast<std::size_t>(s.N)) {
        throw DimensionError("spectrum must hold exactly N projectors");
    }
    const double err = completeness_error(s);
    if (!(err <= tol.eps())) {
        throw IncompleteSpectrum("projectors sum to I only within " +
                                 std::to_string(err));
    }
    std::vector<Matrix> us;
    us.reserve(static_cast<std::size_t>(s.N));
    for (int t = 0; t < s.N; ++t) {
        Matrix u(s.dim, s.dim);
        for (int E = 0; E < s.N; ++E) {
            u += root_of_unity(static_cast<long long>(E) * t, s.N) *
                 s.projectors[static_cast<std::size_t>(E)];
        }
        us.push_back(std::move(u));
    }
    return dynamic_from_unitaries(std::move(us));
}

Matrix time_average(const UnitaryDynamic &d) {
    Matrix avg(d.dim, d.dim);
    for (const auto &u : d.unitaries) {
        avg += u;
    }
    avg *= Complex(1.0 / d.N);
    return avg;
}

Vector fourier_transform(const ClockStructures &cs, const Vector &v) {
    if (v.dim() != static_cast<std::size_t>(cs.N)) {
        throw DimensionError("fourier_transform: vector dimension must equal N");
    }
    Vector f(v.dim());
    for (int E = 0; E < cs.N; ++E) {
        Complex acc = 0.0;
        for (int t = 0; t < cs.N; ++t) {
            acc += std::conj(root_of_unity(static_cast<long long>(E) * t, cs.N)) *
                   v[static_cast<std::size_t>(t)];
        }
        f[static_cast<std::size_t>(E)] = acc / static_cast<double>(cs.N);
    }
    return f;
}

Vector inverse_fourier_transform(const ClockStructures &cs, const Vector &f) {
    if (f.dim() != static_cast<std::size_t>(cs.N)) {
        throw DimensionError(
            "inverse_fourier_transform: vector dimension must equal N");
    }
    Vector v(f.dim());
    for (int t = 0; t < cs.N; ++t) {
        Complex acc = 0.0;
        for (int E = 0; E < cs.N; ++E) {
            acc += root_of_unity(static_cast<long long>(E) * t, cs.N) *
                   f[static_cast<std::size_t>(E)];
        }
        v[static_cast<std::size_t>(t)] = acc;
    }
    return v;
}

double max_family_diff(const UnitaryDynamic &a, const UnitaryDynamic &b) {
    if (a.N != b.N || a.dim != b.dim) {
        throw DimensionError("dynamics differ in N or dimension");
    }
    double worst = 0.0;
    for (int t = 0; t < a.N; ++t) {
        worst = std::max(worst, max_abs_diff(a.at(t), b.at(t)));
    }
    return worst;
}

Json to_json(const UnitaryDynamic &d) {
    if (d.generator) {
        return Json{{"N", d.N}, {"dim", d.dim}, {"generator", to_json(*d.generator)}};
    }
    Json us = Json::array();
    for (const auto &u : d.unitaries) {
        us.push_back(to_json(u));
    }
    return Json{{"unitaries", std::move(us)}};
}

UnitaryDynamic dynamic_from_json(const Json &j, Tolerance tol) {
    if (!j.is_object()) {
        throw InputError("$", "expected a JSON object");
    }
    if (j.contains("unitaries")) {
        const Json &arr = j["unitaries"];
        if (!arr.is_array() || arr.empty()) {
            throw InputError("unitaries", "expected non-empty array of matrices");
        }
        std::vector<Matrix> us;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string field = "unitaries[" + std::to_string(i) + "]";
            Matrix u = matrix_from_json(arr[i], field);
            if (!u.is_square() || (!us.empty() && u.rows() != us.front().rows())) {
                throw InputError(field, "expected square matrix of common size");
            }
            us.push_back(std::move(u));
        }
        return dynamic_from_unitaries(std::move(us));
    }
    const long long N = integer_from_json(require_member(j, "N"), "N");
    if (N < 1 || N > (1 << 20)) {
        throw InputError("N", "clock size must be a positive integer");
    }
    const long long dim = integer_from_json(require_member(j, "dim"), "dim");
    if (dim < 1) {
        throw InputError("dim", "dimension must be positive");
    }
    Matrix g = matrix_from_json(require_member(j, "generator"), "generator");
    if (g.rows() != static_cast<std::size_t>(dim) || !g.is_square()) {
        throw InputError("generator", "expected " + std::to_string(dim) + "x" +
                                          std::to_string(dim) + " matrix");
    }
    return dynamic_from_generator(g, static_cast<int>(N), tol);
}

} // namespace qclock
