#include "qclock/report.hpp"

#include <algorithm>
#include <cmath>

#include "qclock/errors.hpp"

namespace qclock {

Check &Report::add(std::string name, double max_error, double bound,
                   std::string note) {
    // NaN residuals never pass.
    const bool ok = std::isfinite(max_error) && max_error <= bound;
    return add(Check{std::move(name), ok, max_error, std::move(note)});
}

Check &Report::add(Check check) {
    checks_.push_back(std::move(check));
    return checks_.back();
}

bool Report::passed() const noexcept {
    return std::all_of(checks_.begin(), checks_.end(),
                       [](const Check &c) { return c.passed; });
}

double Report::max_error() const noexcept {
    double m = 0.0;
    for (const auto &c : checks_) {
        m = std::max(m, c.max_error);
    }
    return m;
}

const Check &Report::at(std::string_view name) const {
    for (const auto &c : checks_) {
        if (c.name == name) {
            return c;
        }
    }
    throw InvalidArgument("no check named " + std::string(name));
}

bool Report::contains(std::string_view name) const noexcept {
    return std::any_of(checks_.begin(), checks_.end(),
                       [&](const Check &c) { return c.name == name; });
}

} // namespace qclock
