#pragma once

/**
 * @file
 * Unitary dynamics of a Z/N clock: a family U_0, ..., U_{N-1} on a system
 * space with U_0 = I and U_s U_t = U_{s+t}. A dynamic's Hamiltonian is its
 * family of spectral projectors P_E = (1/N) sum_t conj(chi_E(t)) U_t, one per
 * energy level E in Z/N.
 */

#include <optional>
#include <vector>

#include "qclock/groupstruct.hpp"
#include "qclock/json_io.hpp"
#include "qclock/report.hpp"
#include "qclock/tensorkit.hpp"

namespace qclock {

/// An energy level is supported when some entry of P_E exceeds this modulus.
inline constexpr double kSupportThreshold = 1e-7;

struct UnitaryDynamic {
    int N = 1;
    std::size_t dim = 1;
    std::vector<Matrix> unitaries; ///< U_t for t = 0..N-1
    /// U_1 when the family was built from a generator.
    std::optional<Matrix> generator;

    const Matrix &at(long long t) const {
        return unitaries[static_cast<std::size_t>(mod(t, N))];
    }
};

/// U^0, ..., U^{N-1}. Throws NotUnitary, or NotPeriodic when U^N != I.
UnitaryDynamic dynamic_from_generator(const Matrix &U, int N,
                                      Tolerance tol = Tolerance{});

/**
 * Wraps an explicit family without checking the dynamic axioms (use
 * validate_dynamic for that). Throws DimensionError unless every matrix is
 * square of the same size.
 */
UnitaryDynamic dynamic_from_unitaries(std::vector<Matrix> unitaries);

/// The clock acting on itself: U_t = shift^t on C^N.
UnitaryDynamic clock_dynamic(int N);

/// Constant dynamic U_t = I on C^dim.
UnitaryDynamic trivial_dynamic(std::size_t dim, int N);

/**
 * The defining equations of a unitary dynamic, evaluated on H (x) T with the
 * uncurried action alpha(h (x) t) = U_t h:
 *   unit       alpha . (I (x) group_unit) = I
 *   action     alpha . (alpha (x) I) = alpha . (I (x) group_mult)
 *   unitarity  the controlled map C = (alpha (x) I)(I (x) time_copy) is unitary
 *              and its adjoint is C with the antipode on the copied wire.
 * Throws DimensionError if d.N != cs.N.
 */
Report validate_dynamic(const UnitaryDynamic &d, const ClockStructures &cs,
                        Tolerance tol = Tolerance{});

Matrix spectral_projector(const UnitaryDynamic &d, int E);

struct ProjectionSpectrum {
    int N = 1;
    std::size_t dim = 1;
    std::vector<Matrix> projectors; ///< indexed by E
    std::vector<int> support;       ///< ascending
};

ProjectionSpectrum hamiltonian(const UnitaryDynamic &d);

/// round(Re tr P); exact for projectors up to roundoff.
int projector_rank(const Matrix &p);

/// max |sum_E P_E - I|.
double completeness_error(const ProjectionSpectrum &s);

/// U_t = sum_E chi_E(t) P_E. Throws IncompleteSpectrum.
UnitaryDynamic stone_reconstruct(const ProjectionSpectrum &s,
                                 Tolerance tol = Tolerance{});

/// (1/N) sum_t U_t.
Matrix time_average(const UnitaryDynamic &d);

/// Entry E is (1/N) sum_t conj(chi_E(t)) v_t.
Vector fourier_transform(const ClockStructures &cs, const Vector &v);
/// Entry t is sum_E chi_E(t) f_E.
Vector inverse_fourier_transform(const ClockStructures &cs, const Vector &f);

/// max over t of max |a.U_t - b.U_t|. Throws DimensionError on shape mismatch.
double max_family_diff(const UnitaryDynamic &a, const UnitaryDynamic &b);

/// {"N", "dim", "generator"} when generated, else {"unitaries"}.
Json to_json(const UnitaryDynamic &d);
/// Accepts either form. Throws InputError naming the offending field.
UnitaryDynamic dynamic_from_json(const Json &j, Tolerance tol = Tolerance{});

} // namespace qclock
