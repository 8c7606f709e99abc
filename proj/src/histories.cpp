#include "qclock/histories.hpp"

#include "qclock/errors.hpp"

namespace qclock {

History history_from_state(const UnitaryDynamic &d, const Vector &psi) {
    if (psi.dim() != d.dim) {
        throw DimensionError("state dimension does not match dynamic");
    }
    History h;
    h.N = d.N;
    h.dim = d.dim;
    for (const auto &u : d.unitaries) {
        h.states.push_back(u * psi);
    }
    return h;
}

Comparison is_em_morphism(const History &h, const UnitaryDynamic &d,
                          Tolerance tol) {
    if (h.N != d.N || h.dim != d.dim ||
        h.states.size() != static_cast<std::size_t>(h.N)) {
        throw DimensionError("history and dynamic shapes differ");
    }
    double worst = 0.0;
    for (int s = 0; s < h.N; ++s) {
        for (int t = 0; t < h.N; ++t) {
            const Vector &lhs = h.states[static_cast<std::size_t>(mod(s + t, h.N))];
            worst = std::max(
                worst, max_abs_diff(lhs, d.at(t) * h.states[static_cast<std::size_t>(s)]));
        }
    }
    return {worst <= tol.eps(), worst};
}

SpectralSolution schrodinger_solve(const UnitaryDynamic &d, const Vector &psi) {
    if (psi.dim() != d.dim) {
        throw DimensionError("state dimension does not match dynamic");
    }
    SpectralSolution s;
    s.N = d.N;
    s.dim = d.dim;
    for (int E = 0; E < d.N; ++E) {
        s.components.push_back(spectral_projector(d, E) * psi);
    }
    return s;
}

History reconstruct_history(const SpectralSolution &s) {
    if (s.components.size() != static_cast<std::size_t>(s.N)) {
        throw DimensionError("spectral solution must hold N components");
    }
    History h;
    h.N = s.N;
    h.dim = s.dim;
    for (int t = 0; t < s.N; ++t) {
        Vector v(s.dim);
        for (int E = 0; E < s.N; ++E) {
            v += root_of_unity(static_cast<long long>(E) * t, s.N) *
                 s.components[static_cast<std::size_t>(E)];
        }
        h.states.push_back(std::move(v));
    }
    return h;
}

Json to_json(const History &h) {
    Json out = Json::array();
    for (const auto &v : h.states) {
        out.push_back(to_json(v));
    }
    return out;
}

} // namespace qclock
