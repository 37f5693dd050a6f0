#pragma once

#include <optional>
#include <string>
#include <vector>

#include "f0f2/bigint.hpp"

namespace f0f2 {

// One executed identity check. lhs/rhs are exact decimal strings.
struct CheckResult {
    std::string id;
    std::string inputs;
    std::string lhs;
    std::string rhs;
    bool pass = false;
    bool skipped = false;
    std::string note;
    double runtime_ms = 0.0;
};

struct SuiteSummary {
    int total = 0;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckResult> checks; // sorted by id
    SuiteSummary summary;

    bool all_passed() const { return summary.failed == 0 && summary.skipped == 0; }
    // Timing is excluded by default so reports are byte-identical across
    // runs and worker counts.
    std::string to_json(bool with_timing = false) const;
    std::string to_text(bool with_timing = false) const;
};

// Sweep bounds for one suite. Fields not used by a suite are ignored.
struct SuiteRanges {
    int max_a = 0;
    int max_b = 0;
    int max_g = 0;
    int max_n = 0;       // lemma31 / vandermonde upper bound
    int max_r = 0;       // F/G sweeps
    int max_s = 0;       // F/G sweeps
    int gamma0_max_b = 0;
};

// Optional overrides, e.g. from a config file or command-line flags.
struct RangeOverrides {
    std::optional<int> max_a, max_b, max_g, max_n, max_r, max_s, gamma0_max_b;
    std::optional<double> timeout_seconds;
};

const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

// Per-suite defaults; these are the acceptance sweep ranges.
SuiteRanges default_ranges(const std::string& suite);
SuiteRanges apply_overrides(SuiteRanges base, const RangeOverrides& o);

// Parses a JSON config of the form
//   { "timeout_seconds": 600, "suites": { "<suite>": { "max_b": 4, ... } } }
// and returns the overrides recorded for `suite`.
RangeOverrides overrides_from_config(const std::string& json_text, const std::string& suite);

// Runs every check of the suite on `jobs` workers. Checks that have not
// started when `timeout_seconds` elapses are reported as skipped. Throws
// ScopeError when the requested ranges exceed the supported desk scale.
VerificationReport run_suite(const std::string& suite, const SuiteRanges& ranges, int jobs = 1,
                             std::optional<double> timeout_seconds = std::nullopt);

} // namespace f0f2
