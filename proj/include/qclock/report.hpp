#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qclock {

/// One named identity check: its residual and whether it met its bound.
struct Check {
    std::string name;
    bool passed = false;
    double max_error = 0.0;
    std::string note;
};

/// Ordered collection of checks. A report is produced even when checks fail.
class Report {
  public:
    /// Records a check that passes iff max_error <= bound.
    Check &add(std::string name, double max_error, double bound,
               std::string note = {});
    Check &add(Check check);

    bool passed() const noexcept;
    double max_error() const noexcept;
    const std::vector<Check> &checks() const noexcept { return checks_; }

    /// Throws InvalidArgument when absent.
    const Check &at(std::string_view name) const;
    bool contains(std::string_view name) const noexcept;

  private:
    std::vector<Check> checks_;
};

} // namespace qclock
