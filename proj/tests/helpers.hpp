#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "qclock/tensorkit.hpp"

namespace testing {

using qclock::Complex;
using qclock::Matrix;
using qclock::Vector;

inline const Complex I{0.0, 1.0};

/// e^{i 2 pi k / n} via std::exp, independent of root_of_unity.
inline Complex omega(double k, double n) {
    return std::exp(I * (2.0 * std::numbers::pi * k / n));
}

inline Matrix pauli_x() { return Matrix{{0.0, 1.0}, {1.0, 0.0}}; }
inline Matrix pauli_z() { return Matrix{{1.0, 0.0}, {0.0, -1.0}}; }
inline Matrix hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return Matrix{{s, s}, {s, -s}};
}

inline Matrix diag(std::initializer_list<Complex> d) {
    Matrix m(d.size(), d.size());
    std::size_t i = 0;
    for (const auto &z : d) {
        m(i, i) = z;
        ++i;
    }
    return m;
}

inline Vector ket(std::size_t dim, std::size_t k) { return Vector::basis(dim, k); }

} // namespace testing
