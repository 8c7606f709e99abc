#include "qclock/random.hpp"

#include <cmath>

#include "qclock/errors.hpp"

namespace qclock {

namespace {

Complex gaussian(Rng &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    const double re = g(rng);
    const double im = g(rng);
    return {re, im};
}

} // namespace

Matrix haar_unitary(std::size_t dim, Rng &rng) {
    if (dim == 0) {
        throw InvalidArgument("haar_unitary: dimension must be positive");
    }
    std::vector<Vector> cols;
    cols.reserve(dim);
    while (cols.size() < dim) {
        Vector v(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            v[i] = gaussian(rng);
        }
        for (const auto &q : cols) {
            v -= inner(q, v) * q;
        }
        const double n = v.norm();
        if (n < 1e-10) {
            continue;
        }
        v *= Complex(1.0 / n);
        cols.push_back(std::move(v));
    }
    return Matrix::from_columns(cols);
}

Vector random_unit_vector(std::size_t dim, Rng &rng) {
    if (dim == 0) {
        throw InvalidArgument("random_unit_vector: dimension must be positive");
    }
    Vector v(dim);
    double n = 0.0;
    while (n < 1e-10) {
        for (std::size_t i = 0; i < dim; ++i) {
            v[i] = gaussian(rng);
        }
        n = v.norm();
    }
    v *= Complex(1.0 / n);
    return v;
}

RandomGenerator random_generator(std::size_t dim, int N, Rng &rng) {
    if (N < 1) {
        throw InvalidArgument("random_generator: N must be positive");
    }
    RandomGenerator out;
    out.eigenbasis = haar_unitary(dim, rng);
    std::uniform_int_distribution<int> level(0, N - 1);
    Matrix diag(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        out.levels.push_back(level(rng));
        diag(j, j) = root_of_unity(out.levels.back(), N);
    }
    out.generator = out.eigenbasis * diag * dagger(out.eigenbasis);
    return out;
}

} // namespace qclock
