#pragma once

/**
 * @file
 * Concrete histories t -> psi_t of a state under a dynamic, the
 * module-morphism condition psi_{s+t} = U_t psi_s, and the equivalent
 * spectral form in which each component psi_E evolves by the phase chi_E(t).
 */

#include <vector>

#include "qclock/dynamics.hpp"
#include "qclock/json_io.hpp"

namespace qclock {

struct History {
    int N = 1;
    std::size_t dim = 1;
    std::vector<Vector> states; ///< psi_t for t = 0..N-1
};

struct SpectralSolution {
    int N = 1;
    std::size_t dim = 1;
    std::vector<Vector> components; ///< psi_E for E = 0..N-1
};

/// states[t] = U_t psi. Throws DimensionError.
History history_from_state(const UnitaryDynamic &d, const Vector &psi);

/// Max over s, t of |states[s+t] - U_t states[s]|.
Comparison is_em_morphism(const History &h, const UnitaryDynamic &d,
                          Tolerance tol = Tolerance{});

/// components[E] = P_E psi.
SpectralSolution schrodinger_solve(const UnitaryDynamic &d, const Vector &psi);

/// states[t] = sum_E chi_E(t) components[E].
History reconstruct_history(const SpectralSolution &s);

Json to_json(const History &h);

} // namespace qclock
