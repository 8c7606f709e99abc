#pragma once

/**
 * @file
 * Observables as maps H -> H (x) T, demolition measurements, and the Weyl
 * commutation and uncertainty checks for pairs of dynamics.
 *
 * A group-flavoured observable built from a spectrum sends a state in the
 * E-eigenspace to itself tensored with the conjugate character, so that the
 * clock's own energy observable is exactly group_comult. A time-flavoured
 * observable labels outcomes by the time basis.
 */

#include <cstdint>
#include <vector>

#include "qclock/dynamics.hpp"
#include "qclock/groupstruct.hpp"
#include "qclock/report.hpp"

namespace qclock {

enum class Flavour { Time, Group };

struct Observable {
    int N = 1;
    std::size_t dim = 1;
    Matrix map; ///< (dim * N) x dim
    Flavour flavour = Flavour::Group;
};

/// map = sum_E P_E (x) conj(chi_E). Throws IncompleteSpectrum.
Observable observable_from_spectrum(const ProjectionSpectrum &s,
                                    const ClockStructures &cs,
                                    Tolerance tol = Tolerance{});

/// map = time_copy on C^N.
Observable time_observable(const ClockStructures &cs);

/**
 * Self-adjointness, idempotence and completeness of o, each written with the
 * multiplication, comultiplication and counit of o's flavour.
 */
Report verify_observable(const Observable &o, const ClockStructures &cs,
                         Tolerance tol = Tolerance{});

using Distribution = std::vector<double>;

/**
 * Outcome weights over Z/N. Group-flavoured weights carry the 1/N factor
 * that offsets the quasi-special normalisation. Throws NotNormalised unless
 * |psi| = 1 within tol, and InvalidArgument for a weight below -1e-12.
 */
Distribution demolition_measurement(const Observable &o, const Vector &psi,
                                    Tolerance tol = Tolerance{});

/**
 * V_E U_t = chi_E(t) U_t V_E. The check passes over E in the support of
 * dU's Hamiltonian and t in the support of dV's; the note records the
 * unrestricted error when either support is partial.
 */
Report weyl_ccr_check(const UnitaryDynamic &dU, const UnitaryDynamic &dV,
                      Tolerance tol = Tolerance{});

/**
 * Measures eigenstates of dV's Hamiltonian with dU's energy observable and
 * checks each distribution is uniform. One eigenvector per rank-1 space and
 * one seeded random unit vector per higher-rank space. The Weyl precondition
 * is accepted in either order of the pair.
 */
Report uncertainty_check(const UnitaryDynamic &dU, const UnitaryDynamic &dV,
                         Tolerance tol = Tolerance{}, std::uint64_t seed = 0);

/// Normalised column of maximal norm, gauge fixed so the largest-modulus
/// entry is real positive.
Vector eigenvector_of_rank_one(const Matrix &projector);

/// Rotates v so its first entry of (near) maximal modulus is real positive.
Vector fix_gauge(const Vector &v);

} // namespace qclock
