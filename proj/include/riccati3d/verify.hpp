#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "riccati3d/fields.hpp"
#include "riccati3d/integral.hpp"

namespace riccati3d {

struct RunConfig {
    /// Scheme for residuals of closed-form fields.
    DiffScheme scheme{};
    /// Scheme for nested or second-order differences of polynomial test fields.
    DiffScheme poly_scheme{1e-3, 4};
    QuadratureSpec quad{};
    std::uint64_t seed = 1;
    std::size_t samples = 100;
    double margin = 0.1;
    /// Overrides keyed by a check's full name or its short tolerance key.
    std::map<std::string, double> tolerances;

    /// Applies one key=value setting; throws ConfigError on unknown keys or invalid values.
    void set(const std::string& key, const std::string& value);
    /// Reads a flat key=value file ('#' starts a comment).
    void load_file(const std::string& path);
    void validate() const;
};

enum class Comparison {
    /// Residual must not exceed the tolerance.
    AtMost,
    /// Detection check: the smallest observed value must reach the tolerance.
    AtLeast,
    /// Reported only.
    Info,
};

struct CheckResult {
    std::string name;
    /// Largest residual for AtMost checks; smallest observed value for AtLeast checks.
    double max_abs_residual = 0.0;
    double tolerance = 0.0;
    std::size_t samples = 0;
    bool pass = false;
    double seconds = 0.0;
    Comparison comparison = Comparison::AtMost;
    std::string note;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool overall_pass = true;
    std::map<std::string, std::string> config_echo;

    /// JSON with checks sorted by name. Seconds are omitted when include_seconds is false.
    std::string to_json(bool include_seconds = true) const;
    std::string to_table() const;
    const CheckResult* find(const std::string& name) const;
};

std::vector<std::string> suite_names();

/// Runs one suite ("algebra", "operators", "riccati", "euler_picard", "symmetry", "solutions",
/// "oned") or "all". Throws ConfigError for unknown suites.
VerificationReport run_suite(const std::string& suite, const RunConfig& config);

/// Echo of the resolved configuration, as written into reports.
std::map<std::string, std::string> echo_config(const RunConfig& config);

}  // namespace riccati3d
