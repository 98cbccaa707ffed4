#pragma once

// Flat key=value configuration for verification runs.
//
//   # comment
//   abs_tol = 1e-10
//   rel_tol = 1e-10
//   max_refinement = 30
//   truncation_margin = 1.0
//   workers = 4
//   tolerance = 1e-8                         # overrides every case tolerance
//   grid.typeii.int_coth_coth.alpha = 0.5, 1, 2

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mordell/quad.hpp"

namespace mordell::lab {

class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& source, std::size_t line, const std::string& what);
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct LabConfig {
    quad::QuadConfig quad;
    std::optional<double> tolerance_override;
    std::optional<unsigned> workers;
    /// op id -> parameter name -> replacement axis values
    std::map<std::string, std::map<std::string, std::vector<double>>> grid;
};

[[nodiscard]] LabConfig parse_config(std::istream& in, const std::string& source = "<config>");
[[nodiscard]] LabConfig load_config(const std::filesystem::path& path);

/// Canonical text of the config used for the report fingerprint.
[[nodiscard]] std::string canonical_text(const LabConfig& cfg);

}  // namespace mordell::lab
