#pragma once

/**
 * @file
 * Dense complex linear algebra used by every other module: vectors,
 * row-major matrices, Kronecker products, adjoints and tolerance-based
 * comparison.
 *
 * Basis ordering for a product space A (x) B is fixed globally:
 * index = (index in A) * dim(B) + (index in B). For a system H paired with
 * a clock T this reads h * N + t.
 */

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qclock {

using Complex = std::complex<double>;

inline constexpr double kDefaultEps = 1e-9;

/// Absolute per-entry comparison bound, 0 < eps < 1.
class Tolerance {
  public:
    constexpr Tolerance() = default;
    explicit Tolerance(double eps);
    double eps() const noexcept { return eps_; }

  private:
    double eps_ = kDefaultEps;
};

/// Upper bound on total entries of any dense object built by tensor().
/// Defaults to 2^20. Stored atomically so readers on other threads see a
/// consistent value.
std::size_t max_entries() noexcept;
void set_max_entries(std::size_t cap);

class Vector {
  public:
    Vector() = default;
    explicit Vector(std::size_t dim);
    Vector(std::initializer_list<Complex> entries);
    explicit Vector(std::vector<Complex> entries);

    /// Computational basis vector |k> in C^dim.
    static Vector basis(std::size_t dim, std::size_t k);

    std::size_t dim() const noexcept { return data_.size(); }
    Complex operator[](std::size_t i) const { return data_[i]; }
    Complex &operator[](std::size_t i) { return data_[i]; }
    std::span<const Complex> entries() const noexcept { return data_; }

    double norm() const;
    double max_abs() const;

    Vector &operator+=(const Vector &other);
    Vector &operator-=(const Vector &other);
    Vector &operator*=(Complex s);

    friend bool operator==(const Vector &, const Vector &) = default;

  private:
    std::vector<Complex> data_;
};

Vector operator+(Vector a, const Vector &b);
Vector operator-(Vector a, const Vector &b);
Vector operator*(Complex s, Vector v);

/// <a|b>, conjugate-linear in a.
Complex inner(const Vector &a, const Vector &b);
Vector conj(Vector v);
Vector normalized(const Vector &v);

class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static Matrix identity(std::size_t n);
    static Matrix column(const Vector &v);
    /// Effect <v| as a 1 x dim row (conjugated entries).
    static Matrix bra(const Vector &v);
    /// Columns given by `cols`, all of equal dimension.
    static Matrix from_columns(std::span<const Vector> cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    std::span<const Complex> entries() const noexcept { return data_; }

    Complex operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    Complex &operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }

    Vector col(std::size_t c) const;
    double max_abs() const;
    Complex trace() const;

    Matrix &operator+=(const Matrix &other);
    Matrix &operator-=(const Matrix &other);
    Matrix &operator*=(Complex s);

    friend bool operator==(const Matrix &, const Matrix &) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

Matrix operator+(Matrix a, const Matrix &b);
Matrix operator-(Matrix a, const Matrix &b);
Matrix operator*(Complex s, Matrix m);
Matrix operator*(const Matrix &a, const Matrix &b);
Vector operator*(const Matrix &a, const Vector &v);

/// Kronecker product; throws CapacityError past max_entries().
Matrix tensor(const Matrix &a, const Matrix &b);
Vector tensor(const Vector &a, const Vector &b);
Matrix tensor(std::span<const Matrix> factors);
Vector tensor(std::span<const Vector> factors);

/// (a (x) b) v without materialising the Kronecker product.
Vector apply_kron(const Matrix &a, const Matrix &b, const Vector &v);

/**
 * Reorders the tensor legs of v. `dims[k]` is the dimension of leg k and
 * output leg k is input leg `perm[k]`.
 */
Vector permute_legs(const Vector &v, std::span<const std::size_t> dims,
                    std::span<const std::size_t> perm);

Matrix dagger(const Matrix &a);
Matrix power(const Matrix &a, unsigned k);

/// Symmetry A (x) B -> B (x) A.
Matrix swap(std::size_t dim_a, std::size_t dim_b);

struct Comparison {
    bool equal;
    double max_error;
};

/// Max per-entry modulus of a - b; throws DimensionError on shape mismatch.
double max_abs_diff(const Matrix &a, const Matrix &b);
double max_abs_diff(const Vector &a, const Vector &b);
Comparison approx_equal(const Matrix &a, const Matrix &b,
                        Tolerance tol = Tolerance{});
Comparison approx_equal(const Vector &a, const Vector &b,
                        Tolerance tol = Tolerance{});

/// max |U U^dagger - I| and max |U^dagger U - I|.
double unitarity_error(const Matrix &u);

/**
 * Distance between the rays spanned by two vectors: the norm of
 * a/|a| - phase * b/|b| with the phase chosen to align them. Zero when both
 * vectors vanish, 1 when exactly one does (below `zero_norm`).
 */
double ray_distance(const Vector &a, const Vector &b, double zero_norm = 1e-12);

/// e^{i 2 pi k / n}, with k reduced mod n first so large k stays exact.
Complex root_of_unity(long long k, long long n);

/// max over basis inputs e_k of C^in_dim of max |lhs(e_k) - rhs(e_k)|.
template <class Lhs, class Rhs>
double column_residual(std::size_t in_dim, Lhs &&lhs, Rhs &&rhs) {
    double worst = 0.0;
    for (std::size_t k = 0; k < in_dim; ++k) {
        const Vector e = Vector::basis(in_dim, k);
        worst = std::max(worst, max_abs_diff(lhs(e), rhs(e)));
    }
    return worst;
}

/// Matrix whose k-th column is f(e_k).
template <class F> Matrix from_column_map(std::size_t in_dim, F &&f) {
    std::vector<Vector> cols;
    cols.reserve(in_dim);
    for (std::size_t k = 0; k < in_dim; ++k) {
        cols.push_back(f(Vector::basis(in_dim, k)));
    }
    return Matrix::from_columns(cols);
}

/// Non-negative residue of k mod n.
constexpr long long mod(long long k, long long n) {
    const long long r = k % n;
    return r < 0 ? r + n : r;
}

} // namespace qclock
