#pragma once

/**
 * @file
 * The strongly complementary pair carried by a Z/N clock on C^N.
 *
 * The time structure copies, deletes and matches the time basis |t>. The
 * group structure multiplies basis states by addition mod N; it is
 * Frobenius and quasi-special (mult . comult = N * I), its copiables are the
 * characters chi_E(t) = e^{i 2 pi E t / N}, and its antipode |t> -> |-t> is
 * time inversion. All structure maps are built with exact 0/1 entries.
 */

#include "qclock/report.hpp"
#include "qclock/tensorkit.hpp"

namespace qclock {

struct ClockStructures {
    int N = 1;
    Matrix time_copy;     ///< N^2 x N, |t> -> |t t>
    Matrix time_delete;   ///< 1 x N, |t> -> 1
    Matrix time_match;    ///< N x N^2, |s t> -> delta_st |t>
    Matrix time_unit_sum; ///< N x 1, sum_t |t>
    Matrix group_mult;    ///< N x N^2, |s t> -> |s + t>
    Matrix group_unit;    ///< N x 1, |0>
    Matrix group_comult;  ///< N^2 x N, adjoint of group_mult
    Matrix group_counit;  ///< 1 x N, <t| -> delta_t0
    Matrix antipode;      ///< N x N, |t> -> |-t>
};

/// Throws InvalidArgument unless 1 <= N and the N^2 x N maps fit max_entries().
ClockStructures make_clock(int N);

/// Energy label E in Z/N.
struct Character {
    int N;
    int E;
};

/// Entries chi_E(t) = e^{i 2 pi E t / N}; squared norm N.
Vector character_vector(Character c);

/// Clock dynamic curried: U_t |s> = |s + t>, i.e. the shift S^t on C^N.
Matrix shift_matrix(int N, int t = 1);
/// diag(omega^0, ..., omega^{N-1}) raised to the power E.
Matrix clock_matrix(int N, int E = 1);

/**
 * True iff <v| . group_mult = <v| (x) <v| and <v| . group_unit = 1 within
 * tol, where <v| = dagger(v).
 */
bool verify_multiplicative_character(const ClockStructures &cs, const Vector &v,
                                     Tolerance tol = Tolerance{});

/**
 * Axiom report: time-structure Frobenius and speciality laws, group
 * Frobenius laws, quasi-speciality with factor N, the Hopf law, the
 * bialgebra laws between time_copy and group_mult, and antipode^2 = I.
 */
Report verify_strong_complementarity(const ClockStructures &cs,
                                     Tolerance tol = Tolerance{});

} // namespace qclock
