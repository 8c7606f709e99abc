#include "qclock/json_io.hpp"

#include <cmath>
#include <vector>

namespace qclock {

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Vector &v) {
    Json out = Json::array();
    for (const auto &z : v.entries()) {
        out.push_back(to_json(z));
    }
    return out;
}

Json to_json(const Matrix &m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(to_json(m(r, c)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

Json to_json(const Report &r) {
    Json checks = Json::array();
    for (const auto &c : r.checks()) {
        Json item{{"name", c.name}, {"pass", c.passed}, {"max_error", c.max_error}};
        if (!c.note.empty()) {
            item["note"] = c.note;
        }
        checks.push_back(std::move(item));
    }
    return Json{{"checks", std::move(checks)},
                {"pass", r.passed()},
                {"max_error", r.max_error()}};
}

Complex complex_from_json(const Json &j, const std::string &field) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
        !j[1].is_number()) {
        throw InputError(field, "expected complex number [re, im]");
    }
    const double re = j[0].get<double>();
    const double im = j[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
        throw InputError(field, "non-finite complex entry");
    }
    return {re, im};
}

Vector vector_from_json(const Json &j, const std::string &field) {
    if (!j.is_array() || j.empty()) {
        throw InputError(field, "expected non-empty array of complex numbers");
    }
    std::vector<Complex> entries;
    entries.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        entries.push_back(
            complex_from_json(j[i], field + "[" + std::to_string(i) + "]"));
    }
    return Vector(std::move(entries));
}

Matrix matrix_from_json(const Json &j, const std::string &field) {
    if (!j.is_array() || j.empty()) {
        throw InputError(field, "expected non-empty array of rows");
    }
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    std::vector<Complex> entries;
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string row_field = field + "[" + std::to_string(r) + "]";
        const Json &row = j[r];
        if (!row.is_array() || row.empty()) {
            throw InputError(row_field, "expected non-empty row array");
        }
        if (r == 0) {
            cols = row.size();
            entries.reserve(rows * cols);
        } else if (row.size() != cols) {
            throw InputError(row_field, "ragged matrix row");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            entries.push_back(complex_from_json(
                row[c], row_field + "[" + std::to_string(c) + "]"));
        }
    }
    return Matrix(rows, cols, std::move(entries));
}

const Json &require_member(const Json &obj, const std::string &field) {
    if (!obj.is_object()) {
        throw InputError(field, "enclosing value is not an object");
    }
    const auto it = obj.find(field);
    if (it == obj.end()) {
        throw InputError(field, "missing required field");
    }
    return *it;
}

long long integer_from_json(const Json &j, const std::string &field) {
    if (!j.is_number_integer()) {
        throw InputError(field, "expected integer");
    }
    return j.get<long long>();
}

std::string dump_canonical(const Json &j) { return j.dump(2) + "\n"; }

} // namespace qclock
