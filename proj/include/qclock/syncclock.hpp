#pragma once

/**
 * @file
 * Clock-system synchronisation, conservation of total energy, internal time
 * observables and descent of a dynamic onto an internal clock.
 *
 * A synchronised family with total energy chi is
 *   sum over E_1 + ... + E_M = chi (mod N) of (x)_j P^{(j)}_{E_j} psi_j.
 * States are kept unnormalised; proportionality is judged by ray_distance.
 */

#include <optional>
#include <span>
#include <vector>

#include "qclock/dynamics.hpp"
#include "qclock/json_io.hpp"
#include "qclock/report.hpp"

namespace qclock {

struct SyncState {
    std::vector<std::size_t> factor_dims;
    Vector amplitudes;
};

/// sum_t U_t psi (x) |t>; factor_dims = {dim, N}.
SyncState synchronized_pair(const UnitaryDynamic &d, const Vector &psi);

/// Commutators of P_E (x) I_T with I_H (x) |t><t|, plus completeness of both
/// projector families.
Report conundrum_check(const UnitaryDynamic &d, const ClockStructures &cs,
                       Tolerance tol = Tolerance{});

/// Throws DimensionError for mismatched N or state dimensions.
SyncState synchronized_family(std::span<const UnitaryDynamic> ds,
                              std::span<const Vector> psis, int chi);

/// Factorwise product dynamic U_t = (x)_j U^{(j)}_t.
UnitaryDynamic separable_dynamic(std::span<const UnitaryDynamic> ds);

/// A contracted state compared against its predicted synchronised family.
struct Contraction {
    SyncState state;
    SyncState expected;
    Complex scale;   ///< <expected|state> / <expected|expected>, 0 if expected vanishes
    double residual; ///< ray_distance(state, expected)
};

/**
 * Builds the synchronised pair of the separable dynamic and contracts its
 * clock factor with the effect t -> exp(-i 2 pi chi t / N). The result is
 * N times synchronized_family(ds, psis, chi).
 */
Contraction clock_energy_collapse(std::span<const UnitaryDynamic> ds,
                                  std::span<const Vector> psis, int chi);

/**
 * Contracts factor j of fam with the normalised eigenstate P_{E'} psi_j and
 * compares with the family of the remaining systems at total energy
 * chi - E'. Requires at least two systems. Throws OrthogonalEigenstate when
 * |P_{E'} psi_j| < 1e-7.
 */
Contraction subsystem_energy_measure(const SyncState &fam,
                                     std::span<const UnitaryDynamic> ds,
                                     std::span<const Vector> psis, int chi,
                                     std::size_t j, int Eprime);

bool is_nondegenerate(const UnitaryDynamic &d);

struct Eigenpair {
    Vector eigenvector;
    int E;
};

/// One gauge-fixed eigenvector per supported energy, ascending E.
/// Throws Degenerate.
std::vector<Eigenpair> demolition_hamiltonian(const UnitaryDynamic &d);

/// g with energies == {0, g, ..., (m-1) g}, m = |energies|, g = N / m.
std::optional<int> subgroup_generator(int N, std::span<const int> energies);

struct InternalClockDescriptor {
    int N = 1;
    std::vector<int> energies;
    bool subgroup = false;
    int g = 0; ///< meaningful when subgroup
    int m = 0; ///< internal clock size, meaningful when subgroup
    /// |tau> = (1/sqrt m) sum_k exp(i 2 pi k g tau / N) v_{kg}, tau = 0..m-1.
    std::vector<Vector> internal_basis;
    /// max over tau of |U_1 |tau> - |tau+1 mod m>|.
    double permutation_error = 0.0;

    int quotient(long long t) const { return static_cast<int>(mod(t, m)); }
};

/// Energy image without the subgroup requirement. Throws Degenerate.
InternalClockDescriptor describe_internal_clock(const UnitaryDynamic &d);

/// Throws Degenerate or NotASubgroup.
InternalClockDescriptor internal_time_observable(const UnitaryDynamic &d);

/**
 * Internal-clock dynamic V_tau on dH's space: column j of V_tau is
 * m (<tau_int| (x) I) synchronized_family({dG, dH}, {|0_int>, e_j}, chi).
 * Throws Degenerate, NotASubgroup, or AxiomsViolated when the family fails
 * validate_dynamic over Z/m.
 */
UnitaryDynamic dynamic_descent(const UnitaryDynamic &dG, const UnitaryDynamic &dH,
                               int chi, Tolerance tol = Tolerance{});

/// {"N", "energies", "subgroup", "g", "m"}; g and m are null without a subgroup.
Json to_json(const InternalClockDescriptor &d);

} // namespace qclock
