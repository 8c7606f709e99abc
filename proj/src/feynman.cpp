#include "qclock/feynman.hpp"

#include <string>

#include "qclock/errors.hpp"

namespace qclock {

namespace {

std::vector<Vector> orthonormalise(std::vector<Vector> cols, double threshold) {
    std::vector<Vector> basis;
    while (!cols.empty()) {
        std::size_t pivot = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            const double n = cols[i].norm();
            if (n > best) {
                best = n;
                pivot = i;
            }
        }
        if (!(best > threshold)) {
            break;
        }
        Vector q = Complex(1.0 / best) * cols[pivot];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(pivot));
        for (auto &c : cols) {
            c -= inner(q, c) * q;
        }
        basis.push_back(std::move(q));
    }
    return basis;
}

void require_cyclic(const CyclicCircuit &c, Tolerance tol) {
    const double err = max_abs_diff(cycle_product(c), Matrix::identity(c.dim));
    if (!(err <= tol.eps())) {
        throw NotCyclic("cycle product differs from I by " + std::to_string(err));
    }
}

} // namespace

CyclicCircuit make_circuit(std::vector<Matrix> gates, Tolerance tol) {
    if (gates.empty()) {
        throw InvalidArgument("a circuit needs at least one gate");
    }
    const std::size_t dim = gates.front().rows();
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Matrix &g = gates[i];
        if (!g.is_square() || g.rows() != dim || dim == 0) {
            throw DimensionError("gate " + std::to_string(i) +
                                 " is not square of the common dimension");
        }
        if (!(unitarity_error(g) <= tol.eps())) {
            throw NotUnitary("gate " + std::to_string(i) + " is not unitary");
        }
    }
    CyclicCircuit c;
    c.N = static_cast<int>(gates.size());
    c.dim = dim;
    c.gates = std::move(gates);
    return c;
}

Matrix cycle_product(const CyclicCircuit &c) {
    Matrix p = Matrix::identity(c.dim);
    for (int t = 1; t <= c.N; ++t) {
        p = c.gates[static_cast<std::size_t>(mod(t, c.N))] * p;
    }
    return p;
}

bool is_cyclic(const CyclicCircuit &c, Tolerance tol) {
    return max_abs_diff(cycle_product(c), Matrix::identity(c.dim)) <= tol.eps();
}

Matrix composite_step(const CyclicCircuit &c) {
    const auto n = static_cast<std::size_t>(c.N);
    Matrix w(c.dim * n, c.dim * n);
    for (std::size_t t = 0; t < n; ++t) {
        const std::size_t next = (t + 1) % n;
        const Matrix &g = c.gates[next];
        for (std::size_t r = 0; r < c.dim; ++r) {
            for (std::size_t h = 0; h < c.dim; ++h) {
                w(r * n + next, h * n + t) = g(r, h);
            }
        }
    }
    return w;
}

UnitaryDynamic composite_dynamic(const CyclicCircuit &c, Tolerance tol) {
    try {
        return dynamic_from_generator(composite_step(c), c.N, tol);
    } catch (const NotPeriodic &e) {
        throw NotCyclic(std::string("composite step is not periodic: ") + e.what());
    }
}

CyclicCircuit cyclify(const std::vector<Matrix> &gates, Tolerance tol) {
    if (gates.empty()) {
        throw InvalidArgument("cyclify needs at least one gate");
    }
    std::vector<Matrix> out(gates.begin(), gates.end());
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        out.push_back(dagger(*it));
    }
    return make_circuit(std::move(out), tol);
}

Vector history_state(const CyclicCircuit &c, const Vector &psi0, Tolerance tol) {
    if (psi0.dim() != c.dim) {
        throw DimensionError("initial state dimension does not match circuit");
    }
    require_cyclic(c, tol);
    const auto n = static_cast<std::size_t>(c.N);
    Vector out(c.dim * n);
    Vector psi = psi0;
    for (std::size_t t = 0; t < n; ++t) {
        if (t > 0) {
            psi = c.gates[t] * psi;
        }
        for (std::size_t h = 0; h < c.dim; ++h) {
            out[h * n + t] = psi[h];
        }
    }
    return out;
}

GroundSpace ground_space(const UnitaryDynamic &d, double rank_threshold) {
    const Matrix p0 = time_average(d);
    std::vector<Vector> cols;
    cols.reserve(p0.cols());
    for (std::size_t c = 0; c < p0.cols(); ++c) {
        cols.push_back(p0.col(c));
    }
    return {d.dim, orthonormalise(std::move(cols), rank_threshold)};
}

double projection_residual(const std::vector<Vector> &orthonormal,
                           const Vector &v) {
    Vector r = v;
    for (const auto &q : orthonormal) {
        r -= inner(q, r) * q;
    }
    return r.norm();
}

FeynmanReport feynman_check(const CyclicCircuit &c, Tolerance tol) {
    require_cyclic(c, tol);
    const UnitaryDynamic w = composite_dynamic(c, tol);
    const GroundSpace ground = ground_space(w);

    FeynmanReport out;
    out.cyclic = true;
    out.ground_dim = static_cast<int>(ground.basis.size());
    out.expected_dim = static_cast<int>(c.dim);

    std::vector<Vector> histories;
    double in_ground = 0.0;
    double stationary = 0.0;
    for (std::size_t i = 0; i < c.dim; ++i) {
        const Vector h = normalized(history_state(c, Vector::basis(c.dim, i), tol));
        in_ground = std::max(in_ground, projection_residual(ground.basis, h));
        for (const auto &u : w.unitaries) {
            stationary = std::max(stationary, max_abs_diff(u * h, h));
        }
        histories.push_back(h);
    }
    const std::vector<Vector> history_basis = orthonormalise(histories, 1e-7);
    double spans = 0.0;
    for (const auto &g : ground.basis) {
        spans = std::max(spans, projection_residual(history_basis, g));
    }

    Report &r = out.details;
    r.add("histories_in_ground_space", in_ground, tol.eps());
    r.add("histories_stationary", stationary, tol.eps());
    r.add("ground_spanned_by_histories", spans, tol.eps());
    r.add(Check{"ground_dim_equals_system_dim", out.ground_dim == out.expected_dim,
                0.0,
                "ground " + std::to_string(out.ground_dim) + ", system " +
                    std::to_string(out.expected_dim)});
    out.max_residual = std::max({in_ground, stationary, spans});
    out.pass = r.passed();
    return out;
}

Json to_json(const FeynmanReport &r) {
    return Json{{"cyclic", r.cyclic},
                {"ground_dim", r.ground_dim},
                {"expected_dim", r.expected_dim},
                {"max_residual", r.max_residual},
                {"pass", r.pass}};
}

CyclicCircuit circuit_from_json(const Json &j, Tolerance tol) {
    if (!j.is_object()) {
        throw InputError("$", "expected a JSON object");
    }
    const long long N = integer_from_json(require_member(j, "N"), "N");
    const long long dim = integer_from_json(require_member(j, "dim"), "dim");
    const Json &arr = require_member(j, "gates");
    if (N < 1) {
        throw InputError("N", "number of stages must be positive");
    }
    if (dim < 1) {
        throw InputError("dim", "dimension must be positive");
    }
    if (!arr.is_array() || arr.size() != static_cast<std::size_t>(N)) {
        throw InputError("gates", "expected an array of N matrices");
    }
    std::vector<Matrix> gates;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string field = "gates[" + std::to_string(i) + "]";
        Matrix g = matrix_from_json(arr[i], field);
        if (g.rows() != static_cast<std::size_t>(dim) || !g.is_square()) {
            throw InputError(field, "expected " + std::to_string(dim) + "x" +
                                        std::to_string(dim) + " matrix");
        }
        gates.push_back(std::move(g));
    }
    return make_circuit(std::move(gates), tol);
}

} // namespace qclock
