#pragma once

/**
 * @file
 * Cyclic circuits as composite dynamics on H (x) T. The generator advances
 * the clock and applies the gate of the stage being entered:
 * |psi, t> -> gates[t+1 mod N] |psi> (x) |t+1>.
 */

#include <vector>

#include "qclock/dynamics.hpp"
#include "qclock/json_io.hpp"
#include "qclock/report.hpp"

namespace qclock {

struct CyclicCircuit {
    int N = 1;
    std::size_t dim = 1;
    std::vector<Matrix> gates;
};

/// Throws NotUnitary or DimensionError.
CyclicCircuit make_circuit(std::vector<Matrix> gates, Tolerance tol = Tolerance{});

/// gates[0] gates[N-1] ... gates[1], the map accumulated once round the cycle.
Matrix cycle_product(const CyclicCircuit &c);
bool is_cyclic(const CyclicCircuit &c, Tolerance tol = Tolerance{});

/// (dim * N) x (dim * N); block (t+1, t) is gates[t+1].
Matrix composite_step(const CyclicCircuit &c);

/// Dynamic generated by composite_step. Throws NotCyclic.
UnitaryDynamic composite_dynamic(const CyclicCircuit &c,
                                 Tolerance tol = Tolerance{});

/// [g_1..g_n, g_n^dagger..g_1^dagger] with N = 2n. Rejects an empty list.
CyclicCircuit cyclify(const std::vector<Matrix> &gates,
                      Tolerance tol = Tolerance{});

/// sum_t psi_t (x) |t>, psi_{t+1} = gates[t+1] psi_t, unnormalised.
/// Throws NotCyclic.
Vector history_state(const CyclicCircuit &c, const Vector &psi0,
                     Tolerance tol = Tolerance{});

struct GroundSpace {
    std::size_t ambient_dim = 0;
    std::vector<Vector> basis;
};

/// Pivoted modified Gram-Schmidt on the columns of time_average(d).
GroundSpace ground_space(const UnitaryDynamic &d, double rank_threshold = 1e-7);

/// Norm of v minus its orthogonal projection onto span(basis).
double projection_residual(const std::vector<Vector> &orthonormal,
                           const Vector &v);

struct FeynmanReport {
    bool cyclic = false;
    int ground_dim = 0;
    int expected_dim = 0;
    double max_residual = 0.0;
    bool pass = false;
    Report details;
};

/**
 * History states of the basis inputs must lie in the ground space of the
 * composite dynamic, be fixed by every composite unitary, and span it; the
 * ground space must have the system's dimension. Throws NotCyclic.
 */
FeynmanReport feynman_check(const CyclicCircuit &c, Tolerance tol = Tolerance{});

Json to_json(const FeynmanReport &r);

/// {"N", "dim", "gates"}. Throws InputError naming the offending field.
CyclicCircuit circuit_from_json(const Json &j, Tolerance tol = Tolerance{});

} // namespace qclock
