#pragma once

/**
 * @file
 * JSON encodings. Complex numbers are two-element arrays [re, im], vectors
 * are arrays of complex numbers and matrices are row-major nested arrays.
 * Doubles are written in shortest round-trip form, so decode(encode(x)) is
 * bit-exact.
 */

#include <string>
#include <string_view>

#include "json.hpp"
#include "qclock/errors.hpp"
#include "qclock/report.hpp"
#include "qclock/tensorkit.hpp"

namespace qclock {

using Json = nlohmann::json;

/// Malformed input document. `field()` names the offending JSON path.
class InputError : public Error {
  public:
    InputError(std::string field, const std::string &what)
        : Error(field + ": " + what), field_(std::move(field)) {}
    const std::string &field() const noexcept { return field_; }

  private:
    std::string field_;
};

Json to_json(Complex z);
Json to_json(const Vector &v);
Json to_json(const Matrix &m);
Json to_json(const Report &r);

Complex complex_from_json(const Json &j, const std::string &field);
Vector vector_from_json(const Json &j, const std::string &field);
Matrix matrix_from_json(const Json &j, const std::string &field);

/// Member lookup that throws InputError naming `field` when absent.
const Json &require_member(const Json &obj, const std::string &field);
long long integer_from_json(const Json &j, const std::string &field);

/// Canonical serialisation: sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const Json &j);

} // namespace qclock
