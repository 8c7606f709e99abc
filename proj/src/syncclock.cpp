#include "qclock/syncclock.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qclock/errors.hpp"
#include "qclock/measure.hpp"

namespace qclock {

namespace {

void require_family(std::span<const UnitaryDynamic> ds,
                    std::span<const Vector> psis) {
    if (ds.empty()) {
        throw InvalidArgument("a family needs at least one system");
    }
    if (ds.size() != psis.size()) {
        throw DimensionError("one initial state is needed per system");
    }
    for (std::size_t j = 0; j < ds.size(); ++j) {
        if (ds[j].N != ds.front().N) {
            throw DimensionError("systems do not share the clock size N");
        }
        if (psis[j].dim() != ds[j].dim) {
            throw DimensionError("initial state " + std::to_string(j) +
                                 " does not match its system");
        }
    }
}

Contraction compare(SyncState state, SyncState expected) {
    Contraction c;
    const double nn = expected.amplitudes.norm();
    c.scale = nn > 0.0 ? inner(expected.amplitudes, state.amplitudes) / (nn * nn)
                       : Complex(0.0);
    c.residual = ray_distance(state.amplitudes, expected.amplitudes);
    c.state = std::move(state);
    c.expected = std::move(expected);
    return c;
}

/// Contracts tensor factor j of s with the effect <phi|.
SyncState contract_factor(const SyncState &s, std::size_t j, const Vector &phi) {
    const auto &dims = s.factor_dims;
    std::size_t left = 1;
    std::size_t right = 1;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i < j) {
            left *= dims[i];
        } else if (i > j) {
            right *= dims[i];
        }
    }
    const std::size_t dj = dims[j];
    SyncState out;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i != j) {
            out.factor_dims.push_back(dims[i]);
        }
    }
    out.amplitudes = Vector(left * right);
    for (std::size_t l = 0; l < left; ++l) {
        for (std::size_t k = 0; k < dj; ++k) {
            const Complex c = std::conj(phi[k]);
            for (std::size_t r = 0; r < right; ++r) {
                out.amplitudes[l * right + r] += c * s.amplitudes[(l * dj + k) * right + r];
            }
        }
    }
    return out;
}

} // namespace

SyncState synchronized_pair(const UnitaryDynamic &d, const Vector &psi) {
    if (psi.dim() != d.dim) {
        throw DimensionError("state dimension does not match dynamic");
    }
    const auto n = static_cast<std::size_t>(d.N);
    SyncState s;
    s.factor_dims = {d.dim, n};
    s.amplitudes = Vector(d.dim * n);
    for (std::size_t t = 0; t < n; ++t) {
        const Vector v = d.unitaries[t] * psi;
        for (std::size_t h = 0; h < d.dim; ++h) {
            s.amplitudes[h * n + t] = v[h];
        }
    }
    return s;
}

Report conundrum_check(const UnitaryDynamic &d, const ClockStructures &cs,
                       Tolerance tol) {
    if (d.N != cs.N) {
        throw DimensionError("dynamic and clock differ in N");
    }
    const auto n = static_cast<std::size_t>(cs.N);
    const ProjectionSpectrum s = hamiltonian(d);
    const Matrix id_h = Matrix::identity(d.dim);
    const Matrix id_t = Matrix::identity(n);

    std::vector<Matrix> time_proj;
    Matrix time_sum(n, n);
    for (std::size_t t = 0; t < n; ++t) {
        const Vector e = Vector::basis(n, t);
        time_proj.push_back(Matrix::column(e) * Matrix::bra(e));
        time_sum += time_proj.back();
    }
    double comm = 0.0;
    for (const auto &p : s.projectors) {
        const Matrix energy = tensor(p, id_t);
        for (const auto &q : time_proj) {
            const Matrix time = tensor(id_h, q);
            comm = std::max(comm, max_abs_diff(energy * time, time * energy));
        }
    }
    Report r;
    r.add("commutators", comm, tol.eps());
    r.add("energy_complete", completeness_error(s), tol.eps());
    r.add("time_complete", max_abs_diff(time_sum, id_t), tol.eps());
    return r;
}

SyncState synchronized_family(std::span<const UnitaryDynamic> ds,
                              std::span<const Vector> psis, int chi) {
    require_family(ds, psis);
    const int N = ds.front().N;
    if (chi < 0 || chi >= N) {
        throw InvalidArgument("total energy must satisfy 0 <= chi < N");
    }
    const auto n = static_cast<std::size_t>(N);
    auto components = [&](std::size_t j) {
        std::vector<Vector> c;
        for (int E = 0; E < N; ++E) {
            c.push_back(spectral_projector(ds[j], E) * psis[j]);
        }
        return c;
    };

    // partial[r] holds the first j systems with total energy r.
    std::vector<Vector> partial = components(0);
    SyncState out;
    out.factor_dims.push_back(ds[0].dim);
    for (std::size_t j = 1; j < ds.size(); ++j) {
        const std::vector<Vector> next = components(j);
        std::vector<Vector> merged;
        for (std::size_t r = 0; r < n; ++r) {
            Vector acc(partial.front().dim() * ds[j].dim);
            for (std::size_t E = 0; E < n; ++E) {
                acc += tensor(partial[(r + n - E) % n], next[E]);
            }
            merged.push_back(std::move(acc));
        }
        partial = std::move(merged);
        out.factor_dims.push_back(ds[j].dim);
    }
    out.amplitudes = partial[static_cast<std::size_t>(chi)];
    return out;
}

UnitaryDynamic separable_dynamic(std::span<const UnitaryDynamic> ds) {
    if (ds.empty()) {
        throw InvalidArgument("a separable dynamic needs at least one factor");
    }
    const int N = ds.front().N;
    std::vector<Matrix> us;
    for (int t = 0; t < N; ++t) {
        std::vector<Matrix> factors;
        for (const auto &d : ds) {
            if (d.N != N) {
                throw DimensionError("factors do not share the clock size N");
            }
            factors.push_back(d.at(t));
        }
        us.push_back(tensor(factors));
    }
    return dynamic_from_unitaries(std::move(us));
}

Contraction clock_energy_collapse(std::span<const UnitaryDynamic> ds,
                                  std::span<const Vector> psis, int chi) {
    SyncState expected = synchronized_family(ds, psis, chi);
    const int N = ds.front().N;
    const UnitaryDynamic joint = separable_dynamic(ds);
    const SyncState pair = synchronized_pair(joint, tensor(psis));

    Vector effect(static_cast<std::size_t>(N));
    for (int t = 0; t < N; ++t) {
        // Stored conjugated: contract_factor applies <effect|.
        effect[static_cast<std::size_t>(t)] =
            root_of_unity(static_cast<long long>(chi) * t, N);
    }
    SyncState state = contract_factor(pair, 1, effect);
    state.factor_dims = expected.factor_dims;
    return compare(std::move(state), std::move(expected));
}

Contraction subsystem_energy_measure(const SyncState &fam,
                                     std::span<const UnitaryDynamic> ds,
                                     std::span<const Vector> psis, int chi,
                                     std::size_t j, int Eprime) {
    require_family(ds, psis);
    if (ds.size() < 2) {
        throw InvalidArgument("measuring a subsystem needs at least two systems");
    }
    if (j >= ds.size()) {
        throw InvalidArgument("subsystem index out of range");
    }
    if (fam.factor_dims.size() != ds.size()) {
        throw DimensionError("family state does not match the system list");
    }
    const int N = ds.front().N;
    const Vector projected = spectral_projector(ds[j], Eprime) * psis[j];
    if (projected.norm() < kSupportThreshold) {
        throw OrthogonalEigenstate("P_" + std::to_string(Eprime) +
                                   " annihilates the state of system " +
                                   std::to_string(j));
    }
    SyncState state = contract_factor(fam, j, normalized(projected));

    std::vector<UnitaryDynamic> rest_ds;
    std::vector<Vector> rest_psis;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (i != j) {
            rest_ds.push_back(ds[i]);
            rest_psis.push_back(psis[i]);
        }
    }
    SyncState expected = synchronized_family(
        rest_ds, rest_psis, static_cast<int>(mod(chi - Eprime, N)));
    return compare(std::move(state), std::move(expected));
}

bool is_nondegenerate(const UnitaryDynamic &d) {
    const ProjectionSpectrum s = hamiltonian(d);
    if (s.support.size() != d.dim) {
        return false;
    }
    return std::all_of(s.support.begin(), s.support.end(), [&](int E) {
        return projector_rank(s.projectors[static_cast<std::size_t>(E)]) == 1;
    });
}

std::vector<Eigenpair> demolition_hamiltonian(const UnitaryDynamic &d) {
    if (!is_nondegenerate(d)) {
        throw Degenerate("Hamiltonian has an eigenspace of dimension above 1");
    }
    const ProjectionSpectrum s = hamiltonian(d);
    std::vector<Eigenpair> out;
    for (int E : s.support) {
        out.push_back(
            {eigenvector_of_rank_one(s.projectors[static_cast<std::size_t>(E)]), E});
    }
    return out;
}

std::optional<int> subgroup_generator(int N, std::span<const int> energies) {
    const auto m = static_cast<int>(energies.size());
    if (m == 0 || N % m != 0) {
        return std::nullopt;
    }
    const int g = N / m;
    std::vector<int> sorted(energies.begin(), energies.end());
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < m; ++k) {
        if (sorted[static_cast<std::size_t>(k)] != k * g) {
            return std::nullopt;
        }
    }
    return g;
}

InternalClockDescriptor describe_internal_clock(const UnitaryDynamic &d) {
    const std::vector<Eigenpair> eig = demolition_hamiltonian(d);
    InternalClockDescriptor desc;
    desc.N = d.N;
    for (const auto &p : eig) {
        desc.energies.push_back(p.E);
    }
    const std::optional<int> g = subgroup_generator(d.N, desc.energies);
    if (!g) {
        return desc;
    }
    desc.subgroup = true;
    desc.g = *g;
    desc.m = static_cast<int>(desc.energies.size());

    for (int tau = 0; tau < desc.m; ++tau) {
        Vector v(d.dim);
        for (int k = 0; k < desc.m; ++k) {
            v += root_of_unity(static_cast<long long>(k) * desc.g * tau, d.N) *
                 eig[static_cast<std::size_t>(k)].eigenvector;
        }
        v *= Complex(1.0 / std::sqrt(static_cast<double>(desc.m)));
        desc.internal_basis.push_back(std::move(v));
    }
    for (int tau = 0; tau < desc.m; ++tau) {
        desc.permutation_error = std::max(
            desc.permutation_error,
            max_abs_diff(d.at(1) * desc.internal_basis[static_cast<std::size_t>(tau)],
                         desc.internal_basis[static_cast<std::size_t>(
                             desc.quotient(tau + 1))]));
    }
    return desc;
}

InternalClockDescriptor internal_time_observable(const UnitaryDynamic &d) {
    InternalClockDescriptor desc = describe_internal_clock(d);
    if (!desc.subgroup) {
        std::string list;
        for (int E : desc.energies) {
            list += (list.empty() ? "" : ", ") + std::to_string(E);
        }
        throw NotASubgroup("energies {" + list + "} are not a subgroup of Z/" +
                           std::to_string(d.N));
    }
    return desc;
}

UnitaryDynamic dynamic_descent(const UnitaryDynamic &dG, const UnitaryDynamic &dH,
                               int chi, Tolerance tol) {
    if (dG.N != dH.N) {
        throw DimensionError("descent needs dynamics over the same clock");
    }
    const InternalClockDescriptor desc = internal_time_observable(dG);
    const int m = desc.m;
    const std::vector<UnitaryDynamic> pair{dG, dH};

    std::vector<Matrix> family(static_cast<std::size_t>(m), Matrix(dH.dim, dH.dim));
    for (std::size_t j = 0; j < dH.dim; ++j) {
        const std::vector<Vector> psis{desc.internal_basis.front(),
                                       Vector::basis(dH.dim, j)};
        const SyncState fam = synchronized_family(pair, psis, chi);
        for (int tau = 0; tau < m; ++tau) {
            const SyncState col = contract_factor(
                fam, 0, desc.internal_basis[static_cast<std::size_t>(tau)]);
            for (std::size_t r = 0; r < dH.dim; ++r) {
                family[static_cast<std::size_t>(tau)](r, j) =
                    static_cast<double>(m) * col.amplitudes[r];
            }
        }
    }
    UnitaryDynamic v = dynamic_from_unitaries(std::move(family));
    const Report check = validate_dynamic(v, make_clock(m), tol);
    if (!check.passed()) {
        throw AxiomsViolated("descended family fails the dynamic axioms",
                             check.max_error());
    }
    return v;
}

Json to_json(const InternalClockDescriptor &d) {
    Json out{{"N", d.N}, {"energies", d.energies}, {"subgroup", d.subgroup}};
    out["g"] = d.subgroup ? Json(d.g) : Json(nullptr);
    out["m"] = d.subgroup ? Json(d.m) : Json(nullptr);
    return out;
}

} // namespace qclock
