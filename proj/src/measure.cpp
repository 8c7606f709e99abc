#include "qclock/measure.hpp"

#include <cmath>
#include <string>

#include "qclock/errors.hpp"
#include "qclock/random.hpp"

namespace qclock {

namespace {

struct FlavourMaps {
    const Matrix &mult;
    const Matrix &comult;
    const Matrix &counit;
};

FlavourMaps maps_for(const Observable &o, const ClockStructures &cs) {
    if (o.flavour == Flavour::Time) {
        return {cs.time_match, cs.time_copy, cs.time_delete};
    }
    return {cs.group_mult, cs.group_comult, cs.group_counit};
}

/// (<psi| (x) I_T) v for v in H (x) T.
Vector partial_contract_system(const Vector &psi, const Vector &v, std::size_t n) {
    Vector out(n);
    for (std::size_t h = 0; h < psi.dim(); ++h) {
        const Complex c = std::conj(psi[h]);
        for (std::size_t t = 0; t < n; ++t) {
            out[t] += c * v[h * n + t];
        }
    }
    return out;
}

} // namespace

Observable observable_from_spectrum(const ProjectionSpectrum &s,
                                    const ClockStructures &cs, Tolerance tol) {
    if (s.N != cs.N) {
        throw DimensionError("spectrum and clock differ in N");
    }
    const double err = completeness_error(s);
    if (!(err <= tol.eps())) {
        throw IncompleteSpectrum("projectors sum to I only within " +
                                 std::to_string(err));
    }
    Observable o;
    o.N = s.N;
    o.dim = s.dim;
    o.flavour = Flavour::Group;
    o.map = Matrix(s.dim * static_cast<std::size_t>(s.N), s.dim);
    for (int E = 0; E < s.N; ++E) {
        const Matrix label = Matrix::column(conj(character_vector({s.N, E})));
        o.map += tensor(s.projectors[static_cast<std::size_t>(E)], label);
    }
    return o;
}

Observable time_observable(const ClockStructures &cs) {
    Observable o;
    o.N = cs.N;
    o.dim = static_cast<std::size_t>(cs.N);
    o.flavour = Flavour::Time;
    o.map = cs.time_copy;
    return o;
}

Report verify_observable(const Observable &o, const ClockStructures &cs,
                         Tolerance tol) {
    if (o.N != cs.N) {
        throw DimensionError("observable and clock differ in N");
    }
    const auto n = static_cast<std::size_t>(cs.N);
    const FlavourMaps f = maps_for(o, cs);
    const Matrix id_h = Matrix::identity(o.dim);
    const Matrix id_t = Matrix::identity(n);
    const Matrix pairing = f.counit * f.mult;
    const Matrix adj = dagger(o.map);

    Report r;
    r.add("self_adjoint",
          column_residual(
              o.dim * n, [&](const Vector &e) { return adj * e; },
              [&](const Vector &e) {
                  return apply_kron(id_h, pairing, apply_kron(o.map, id_t, e));
              }),
          tol.eps());
    r.add("idempotent",
          column_residual(
              o.dim,
              [&](const Vector &e) { return apply_kron(o.map, id_t, o.map * e); },
              [&](const Vector &e) {
                  return apply_kron(id_h, f.comult, o.map * e);
              }),
          tol.eps());
    r.add("complete",
          max_abs_diff(from_column_map(o.dim,
                                       [&](const Vector &e) {
                                           return apply_kron(id_h, f.counit,
                                                             o.map * e);
                                       }),
                       id_h),
          tol.eps());
    return r;
}

Distribution demolition_measurement(const Observable &o, const Vector &psi,
                                    Tolerance tol) {
    if (psi.dim() != o.dim) {
        throw DimensionError("state dimension does not match observable");
    }
    const double norm = psi.norm();
    if (!(std::abs(norm - 1.0) <= tol.eps())) {
        throw NotNormalised("state has norm " + std::to_string(norm));
    }
    const auto n = static_cast<std::size_t>(o.N);
    const Vector outcome = partial_contract_system(psi, o.map * psi, n);
    Distribution w(n);
    for (std::size_t k = 0; k < n; ++k) {
        Complex amp;
        if (o.flavour == Flavour::Time) {
            amp = outcome[k];
        } else {
            const Vector label = conj(character_vector({o.N, static_cast<int>(k)}));
            amp = inner(label, outcome) / static_cast<double>(o.N);
        }
        double x = amp.real();
        if (x < 0.0) {
            if (x < -1e-12) {
                throw InvalidArgument("negative outcome weight " +
                                      std::to_string(x));
            }
            x = 0.0;
        }
        w[k] = x;
    }
    return w;
}

Report weyl_ccr_check(const UnitaryDynamic &dU, const UnitaryDynamic &dV,
                      Tolerance tol) {
    if (dU.dim != dV.dim || dU.N != dV.N) {
        throw DimensionError("Weyl check needs dynamics of equal N and dimension");
    }
    const ProjectionSpectrum hu = hamiltonian(dU);
    const ProjectionSpectrum hv = hamiltonian(dV);
    std::vector<bool> e_supported(static_cast<std::size_t>(dU.N), false);
    std::vector<bool> t_supported(static_cast<std::size_t>(dU.N), false);
    for (int E : hu.support) {
        e_supported[static_cast<std::size_t>(E)] = true;
    }
    for (int t : hv.support) {
        t_supported[static_cast<std::size_t>(t)] = true;
    }

    double supported = 0.0;
    double all_pairs = 0.0;
    for (int E = 0; E < dU.N; ++E) {
        for (int t = 0; t < dU.N; ++t) {
            const Matrix lhs = dV.at(E) * dU.at(t);
            const Matrix rhs = root_of_unity(static_cast<long long>(E) * t, dU.N) *
                               (dU.at(t) * dV.at(E));
            const double err = max_abs_diff(lhs, rhs);
            all_pairs = std::max(all_pairs, err);
            if (e_supported[static_cast<std::size_t>(E)] &&
                t_supported[static_cast<std::size_t>(t)]) {
                supported = std::max(supported, err);
            }
        }
    }
    Report r;
    std::string note;
    if (hu.support.size() != static_cast<std::size_t>(dU.N) ||
        hv.support.size() != static_cast<std::size_t>(dU.N)) {
        note = "degenerate: partial support, unrestricted error " +
               std::to_string(all_pairs);
    }
    r.add("weyl", supported, tol.eps(), note);
    return r;
}

Vector fix_gauge(const Vector &v) {
    double peak = v.max_abs();
    if (peak == 0.0) {
        return v;
    }
    std::size_t pick = 0;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (std::abs(v[i]) >= peak - 1e-12) {
            pick = i;
            break;
        }
    }
    const Complex phase = std::conj(v[pick]) / std::abs(v[pick]);
    return phase * v;
}

Vector eigenvector_of_rank_one(const Matrix &projector) {
    std::size_t best = 0;
    double best_norm = -1.0;
    for (std::size_t c = 0; c < projector.cols(); ++c) {
        const double nrm = projector.col(c).norm();
        if (nrm > best_norm) {
            best_norm = nrm;
            best = c;
        }
    }
    if (!(best_norm > kSupportThreshold)) {
        throw InvalidArgument("projector is numerically zero");
    }
    return fix_gauge(normalized(projector.col(best)));
}

Report uncertainty_check(const UnitaryDynamic &dU, const UnitaryDynamic &dV,
                         Tolerance tol, std::uint64_t seed) {
    const Report forward = weyl_ccr_check(dU, dV, tol);
    const Report backward = weyl_ccr_check(dV, dU, tol);
    Check pre = forward.passed() ? forward.checks().front()
                                 : backward.checks().front();
    pre.name = "weyl_precondition";
    if (!forward.passed() && backward.passed()) {
        pre.note = "holds with the pair reversed";
    }
    Report r;
    r.add(std::move(pre));

    const ClockStructures cs = make_clock(dU.N);
    const Observable obs = observable_from_spectrum(hamiltonian(dU), cs, tol);
    const ProjectionSpectrum hv = hamiltonian(dV);
    const double uniform = 1.0 / dU.N;
    Rng rng(seed);
    for (int E : hv.support) {
        const Matrix &p = hv.projectors[static_cast<std::size_t>(E)];
        const int rank = projector_rank(p);
        Vector psi;
        std::string note;
        if (rank == 1) {
            psi = eigenvector_of_rank_one(p);
        } else {
            psi = normalized(p * random_unit_vector(dV.dim, rng));
            note = "random vector in rank-" + std::to_string(rank) + " eigenspace";
        }
        const Distribution w = demolition_measurement(obs, psi, tol);
        double dev = 0.0;
        for (double x : w) {
            dev = std::max(dev, std::abs(x - uniform));
        }
        r.add("eigenstate.E=" + std::to_string(E), dev, tol.eps(), note);
    }
    return r;
}

} // namespace qclock
