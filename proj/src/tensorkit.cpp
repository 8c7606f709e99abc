#include "qclock/tensorkit.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <string>

#include "qclock/errors.hpp"

namespace qclock {

namespace {

std::atomic<std::size_t> g_max_entries{std::size_t{1} << 20};

void require_finite(std::span<const Complex> entries) {
    for (const auto &z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw InvalidArgument("non-finite entry");
        }
    }
}

void require_same_shape(const Matrix &a, const Matrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(op) + ": shape mismatch " +
                             std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " vs " +
                             std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
    }
}

void require_capacity(std::size_t rows, std::size_t cols) {
    const std::size_t cap = max_entries();
    if (rows != 0 && cols > cap / rows) {
        throw CapacityError("tensor: " + std::to_string(rows) + "x" +
                            std::to_string(cols) + " exceeds cap of " +
                            std::to_string(cap) + " entries");
    }
}

} // namespace

Tolerance::Tolerance(double eps) : eps_(eps) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw InvalidArgument("tolerance must satisfy 0 < eps < 1");
    }
}

std::size_t max_entries() noexcept {
    return g_max_entries.load(std::memory_order_relaxed);
}

void set_max_entries(std::size_t cap) {
    if (cap == 0) {
        throw InvalidArgument("entry cap must be positive");
    }
    g_max_entries.store(cap, std::memory_order_relaxed);
}

// Vector

Vector::Vector(std::size_t dim) : data_(dim) {}

Vector::Vector(std::initializer_list<Complex> entries) : data_(entries) {
    require_finite(data_);
}

Vector::Vector(std::vector<Complex> entries) : data_(std::move(entries)) {
    require_finite(data_);
}

Vector Vector::basis(std::size_t dim, std::size_t k) {
    if (k >= dim) {
        throw DimensionError("basis index out of range");
    }
    Vector v(dim);
    v[k] = 1.0;
    return v;
}

double Vector::norm() const {
    double s = 0.0;
    for (const auto &z : data_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

double Vector::max_abs() const {
    double m = 0.0;
    for (const auto &z : data_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

Vector &Vector::operator+=(const Vector &other) {
    if (dim() != other.dim()) {
        throw DimensionError("vector add: dimension mismatch");
    }
    for (std::size_t i = 0; i < dim(); ++i) {
        data_[i] += other.data_[i];
    }
    return *this;
}

Vector &Vector::operator-=(const Vector &other) {
    if (dim() != other.dim()) {
        throw DimensionError("vector subtract: dimension mismatch");
    }
    for (std::size_t i = 0; i < dim(); ++i) {
        data_[i] -= other.data_[i];
    }
    return *this;
}

Vector &Vector::operator*=(Complex s) {
    for (auto &z : data_) {
        z *= s;
    }
    return *this;
}

Vector operator+(Vector a, const Vector &b) { return a += b; }
Vector operator-(Vector a, const Vector &b) { return a -= b; }
Vector operator*(Complex s, Vector v) { return v *= s; }

Complex inner(const Vector &a, const Vector &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("inner: dimension mismatch");
    }
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

Vector conj(Vector v) {
    for (std::size_t i = 0; i < v.dim(); ++i) {
        v[i] = std::conj(v[i]);
    }
    return v;
}

Vector normalized(const Vector &v) {
    const double n = v.norm();
    if (n == 0.0) {
        throw InvalidArgument("cannot normalise the zero vector");
    }
    return Complex(1.0 / n) * v;
}

// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw DimensionError("matrix: entry count does not match shape");
    }
    require_finite(data_);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_) {
            throw DimensionError("matrix: ragged initializer");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
    require_finite(data_);
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::column(const Vector &v) {
    return Matrix(v.dim(), 1, {v.entries().begin(), v.entries().end()});
}

Matrix Matrix::bra(const Vector &v) {
    Matrix m(1, v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        m(0, i) = std::conj(v[i]);
    }
    return m;
}

Matrix Matrix::from_columns(std::span<const Vector> cols) {
    if (cols.empty()) {
        throw DimensionError("from_columns: no columns");
    }
    const std::size_t rows = cols.front().dim();
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].dim() != rows) {
            throw DimensionError("from_columns: ragged columns");
        }
        for (std::size_t r = 0; r < rows; ++r) {
            m(r, c) = cols[c][r];
        }
    }
    return m;
}

Vector Matrix::col(std::size_t c) const {
    if (c >= cols_) {
        throw DimensionError("column index out of range");
    }
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v[r] = (*this)(r, c);
    }
    return v;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const auto &z : data_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

Complex Matrix::trace() const {
    if (!is_square()) {
        throw DimensionError("trace of non-square matrix");
    }
    Complex s = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        s += (*this)(i, i);
    }
    return s;
}

Matrix &Matrix::operator+=(const Matrix &other) {
    require_same_shape(*this, other, "add");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += other.data_[i];
    }
    return *this;
}

Matrix &Matrix::operator-=(const Matrix &other) {
    require_same_shape(*this, other, "subtract");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= other.data_[i];
    }
    return *this;
}

Matrix &Matrix::operator*=(Complex s) {
    for (auto &z : data_) {
        z *= s;
    }
    return *this;
}

Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
Matrix operator*(Complex s, Matrix m) { return m *= s; }

Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("multiply: inner dimensions differ (" +
                             std::to_string(a.cols()) + " vs " +
                             std::to_string(b.rows()) + ")");
    }
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

Vector operator*(const Matrix &a, const Vector &v) {
    if (a.cols() != v.dim()) {
        throw DimensionError("apply: dimension mismatch (" +
                             std::to_string(a.cols()) + " vs " +
                             std::to_string(v.dim()) + ")");
    }
    Vector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            s += a(i, j) * v[j];
        }
        out[i] = s;
    }
    return out;
}

Matrix tensor(const Matrix &a, const Matrix &b) {
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    require_capacity(rows, cols);
    Matrix c(rows, cols);
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            const Complex aij = a(i1, j1);
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
                    c(i1 * b.rows() + i2, j1 * b.cols() + j2) = aij * b(i2, j2);
                }
            }
        }
    }
    return c;
}

Vector tensor(const Vector &a, const Vector &b) {
    require_capacity(a.dim() * b.dim(), 1);
    Vector c(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            c[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return c;
}

Matrix tensor(std::span<const Matrix> factors) {
    Matrix acc = Matrix::identity(1);
    for (const auto &f : factors) {
        acc = tensor(acc, f);
    }
    return acc;
}

Vector tensor(std::span<const Vector> factors) {
    Vector acc{Complex{1.0}};
    for (const auto &f : factors) {
        acc = tensor(acc, f);
    }
    return acc;
}

Vector apply_kron(const Matrix &a, const Matrix &b, const Vector &v) {
    const std::size_t ac = a.cols();
    const std::size_t bc = b.cols();
    if (v.dim() != ac * bc) {
        throw DimensionError("apply_kron: dimension mismatch");
    }
    // v viewed as an (ac x bc) matrix V; result is a V b^T flattened.
    std::vector<Complex> av(a.rows() * bc);
    for (std::size_t p = 0; p < a.rows(); ++p) {
        for (std::size_t i = 0; i < ac; ++i) {
            const Complex api = a(p, i);
            if (api == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < bc; ++j) {
                av[p * bc + j] += api * v[i * bc + j];
            }
        }
    }
    Vector out(a.rows() * b.rows());
    for (std::size_t q = 0; q < b.rows(); ++q) {
        for (std::size_t j = 0; j < bc; ++j) {
            const Complex bqj = b(q, j);
            if (bqj == Complex{}) {
                continue;
            }
            for (std::size_t p = 0; p < a.rows(); ++p) {
                out[p * b.rows() + q] += av[p * bc + j] * bqj;
            }
        }
    }
    return out;
}

Vector permute_legs(const Vector &v, std::span<const std::size_t> dims,
                    std::span<const std::size_t> perm) {
    const std::size_t legs = dims.size();
    if (perm.size() != legs) {
        throw DimensionError("permute_legs: permutation length mismatch");
    }
    std::size_t total = 1;
    for (auto d : dims) {
        total *= d;
    }
    if (total != v.dim()) {
        throw DimensionError("permute_legs: leg dimensions do not match vector");
    }
    std::vector<bool> seen(legs, false);
    std::vector<std::size_t> out_dims(legs);
    for (std::size_t k = 0; k < legs; ++k) {
        if (perm[k] >= legs || seen[perm[k]]) {
            throw InvalidArgument("permute_legs: not a permutation");
        }
        seen[perm[k]] = true;
        out_dims[k] = dims[perm[k]];
    }
    // Row-major strides of the input legs.
    std::vector<std::size_t> in_stride(legs, 1);
    for (std::size_t k = legs; k-- > 1;) {
        in_stride[k - 1] = in_stride[k] * dims[k];
    }
    Vector out(total);
    std::vector<std::size_t> digit(legs, 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t src = 0;
        for (std::size_t k = 0; k < legs; ++k) {
            src += digit[k] * in_stride[perm[k]];
        }
        out[idx] = v[src];
        for (std::size_t k = legs; k-- > 0;) {
            if (++digit[k] < out_dims[k]) {
                break;
            }
            digit[k] = 0;
        }
    }
    return out;
}

Matrix dagger(const Matrix &a) {
    Matrix d(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            d(j, i) = std::conj(a(i, j));
        }
    }
    return d;
}

Matrix power(const Matrix &a, unsigned k) {
    if (!a.is_square()) {
        throw DimensionError("power of non-square matrix");
    }
    Matrix result = Matrix::identity(a.rows());
    Matrix base = a;
    while (k > 0) {
        if (k & 1u) {
            result = result * base;
        }
        k >>= 1u;
        if (k > 0) {
            base = base * base;
        }
    }
    return result;
}

Matrix swap(std::size_t dim_a, std::size_t dim_b) {
    const std::size_t n = dim_a * dim_b;
    require_capacity(n, n);
    Matrix s(n, n);
    for (std::size_t i = 0; i < dim_a; ++i) {
        for (std::size_t j = 0; j < dim_b; ++j) {
            s(j * dim_a + i, i * dim_b + j) = 1.0;
        }
    }
    return s;
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    require_same_shape(a, b, "compare");
    double m = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return m;
}

double max_abs_diff(const Vector &a, const Vector &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("compare: dimension mismatch " +
                             std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()));
    }
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

Comparison approx_equal(const Matrix &a, const Matrix &b, Tolerance tol) {
    const double err = max_abs_diff(a, b);
    return {err <= tol.eps(), err};
}

Comparison approx_equal(const Vector &a, const Vector &b, Tolerance tol) {
    const double err = max_abs_diff(a, b);
    return {err <= tol.eps(), err};
}

double unitarity_error(const Matrix &u) {
    if (!u.is_square()) {
        throw DimensionError("unitarity check of non-square matrix");
    }
    const Matrix id = Matrix::identity(u.rows());
    const Matrix ud = dagger(u);
    return std::max(max_abs_diff(u * ud, id), max_abs_diff(ud * u, id));
}

double ray_distance(const Vector &a, const Vector &b, double zero_norm) {
    const double na = a.norm();
    const double nb = b.norm();
    const bool za = na < zero_norm;
    const bool zb = nb < zero_norm;
    if (za && zb) {
        return 0.0;
    }
    if (za || zb) {
        return 1.0;
    }
    const Complex overlap = inner(b, a);
    const Complex phase =
        std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0};
    Vector diff = Complex(1.0 / na) * a;
    diff -= (phase / nb) * b;
    return diff.norm();
}

Complex root_of_unity(long long k, long long n) {
    const long long r = mod(k, n);
    // Quarter turns are returned exactly.
    if ((4 * r) % n == 0) {
        switch ((4 * r) / n) {
        case 0:
            return {1.0, 0.0};
        case 1:
            return {0.0, 1.0};
        case 2:
            return {-1.0, 0.0};
        default:
            return {0.0, -1.0};
        }
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) /
                               static_cast<double>(n));
}

} // namespace qclock
