#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mordell/lab/config.hpp"
#include "mordell/quad.hpp"

namespace mordell::lab {

using Params = std::map<std::string, double>;

/// What one evaluation produced. Without `expected` the computed value is
/// itself a residual of a pairwise identity and must be close to zero.
struct Outcome {
    double computed;
    std::optional<double> expected;

    [[nodiscard]] double residual() const;
};

struct OpSpec {
    std::string id;  ///< "<suite>.<name>"
    std::vector<std::pair<std::string, std::vector<double>>> axes;
    double tolerance;
    bool tight = false;  ///< evaluate under cfg.tightened(100)
    std::function<Outcome(const Params&, const quad::QuadConfig&)> eval;

    [[nodiscard]] std::string suite() const { return id.substr(0, id.find('.')); }
};

struct IdentityCase {
    const OpSpec* op;
    Params params;
    double tolerance;

    [[nodiscard]] const std::string& id() const { return op->id; }
};

/// Every registered operation, in id order.
[[nodiscard]] const std::vector<OpSpec>& registry();

[[nodiscard]] const std::vector<std::string>& suite_names();

/// Resolves "id" or "id[k=v,...]" into the op and its pinned parameters.
struct OpRef {
    const OpSpec* op;
    Params pinned;
};
[[nodiscard]] OpRef resolve_op(const std::string& text);

/// Cartesian expansion of the suite's grids, honoring config overrides.
/// Throws std::invalid_argument for an unknown suite name.
[[nodiscard]] std::vector<IdentityCase> expand_suite(const std::string& suite, const LabConfig& cfg);

}  // namespace mordell::lab
