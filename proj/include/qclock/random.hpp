#pragma once

/**
 * @file
 * Seeded random instances for property checks. Every generator takes the
 * engine by reference, so a fixed seed reproduces the whole sequence.
 */

#include <cstdint>
#include <random>
#include <vector>

#include "qclock/tensorkit.hpp"

namespace qclock {

using Rng = std::mt19937_64;

/// Haar-distributed unitary on C^dim.
Matrix haar_unitary(std::size_t dim, Rng &rng);

/// Uniform point on the unit sphere of C^dim.
Vector random_unit_vector(std::size_t dim, Rng &rng);

/// Generator V diag(omega^{k_j}) V^dagger of a random Z/N dynamic.
struct RandomGenerator {
    Matrix generator;
    Matrix eigenbasis;       ///< V, columns are eigenvectors
    std::vector<int> levels; ///< k_j in [0, N)
};

RandomGenerator random_generator(std::size_t dim, int N, Rng &rng);

} // namespace qclock
