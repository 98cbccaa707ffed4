#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mordell/lab/config.hpp"
#include "mordell/lab/registry.hpp"

namespace mordell::lab {

struct CaseResult {
    std::string id;
    Params params;
    double computed = 0.0;
    std::optional<double> expected;  ///< empty: pairwise identity
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    double wall_time_ms = 0.0;
    std::size_t evaluations = 0;
    std::optional<std::string> error;  ///< set when the evaluation threw
};

struct Summary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
};

struct VerificationReport {
    std::string suite;
    std::vector<CaseResult> cases;  ///< sorted by id, then params
    Summary summary;
    std::string config_fingerprint;
};

/// Worker count: explicit value, else the config's, else MORDELL_LAB_WORKERS,
/// else the hardware concurrency. Throws std::invalid_argument on a bad env value.
[[nodiscard]] unsigned resolve_workers(std::optional<unsigned> requested, const LabConfig& cfg);

/// Runs every case of the suite; result order never depends on `workers`.
[[nodiscard]] VerificationReport run_suite(const std::string& suite, const LabConfig& cfg, unsigned workers);

/// Evaluates one case on the calling thread.
[[nodiscard]] CaseResult run_case(const IdentityCase& c, const LabConfig& cfg);

/// JSON with sorted keys and 17 significant digits; wall times only on request.
[[nodiscard]] std::string report_json(const VerificationReport& report, bool include_timings = false);

/// 64-bit FNV-1a, hex encoded.
[[nodiscard]] std::string fnv1a_hex(const std::string& text);

struct SweepRange {
    double lo;
    double hi;
    std::size_t count;
};

/// CSV with header param_value,computed,expected,residual. Parameters other
/// than `param` come from the op pins or else the first default grid value.
void sweep(const std::string& op_text, const std::string& param, const SweepRange& range,
           const LabConfig& cfg, std::ostream& out);

}  // namespace mordell::lab
