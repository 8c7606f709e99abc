#pragma once

/**
 * @file
 * Command-line front end. Every command writes one canonical JSON report.
 * Exit status: 0 when every check passes, 1 when a check fails, 2 when the
 * invocation or an input document is malformed.
 */

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "qclock/json_io.hpp"
#include "qclock/tensorkit.hpp"

namespace qclock {

inline constexpr int kSchemaVersion = 1;

enum class ExitCode : int { Pass = 0, CheckFailed = 1, InputError = 2 };

struct RunConfig {
    /// axioms, dynamic, feynman, sync, internal-time or self-test.
    std::string command;
    std::optional<std::string> input_path;
    std::optional<int> N;
    std::uint64_t seed = 0;
    Tolerance tol;
    std::optional<std::string> output_path;
    std::size_t max_dim = std::size_t{1} << 20;
};

struct RunResult {
    ExitCode code = ExitCode::Pass;
    Json report;
};

/// Runs one command. Never throws for library or input errors.
RunResult execute(const RunConfig &config);

/// Runs, then writes the report to config.output_path or `out`.
/// Diagnostics go to `err`.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Parses argv and calls run().
int cli_main(int argc, const char *const *argv, std::ostream &out,
             std::ostream &err);

} // namespace qclock
