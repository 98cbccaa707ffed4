#include "mordell/lab/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace mordell::lab {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

double parse_real(const std::string& text, const std::string& source, std::size_t line) {
    double v = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw ConfigError(source, line, "expected a real number, got '" + text + "'");
    }
    return v;
}

long parse_integer(const std::string& text, const std::string& source, std::size_t line) {
    long v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw ConfigError(source, line, "expected an integer, got '" + text + "'");
    }
    return v;
}

std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

ConfigError::ConfigError(const std::string& source, std::size_t line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

LabConfig parse_config(std::istream& in, const std::string& source) {
    LabConfig cfg;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        const std::string text = trim(std::string_view(raw).substr(0, hash));
        if (text.empty()) {
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(source, line, "expected key = value");
        }
        const std::string key = trim(std::string_view(text).substr(0, eq));
        const std::string value = trim(std::string_view(text).substr(eq + 1));
        if (key.empty()) {
            throw ConfigError(source, line, "empty key");
        }

        if (key == "abs_tol") {
            cfg.quad.abs_tol = parse_real(value, source, line);
        } else if (key == "rel_tol") {
            cfg.quad.rel_tol = parse_real(value, source, line);
        } else if (key == "max_refinement") {
            cfg.quad.max_refinement = static_cast<int>(parse_integer(value, source, line));
        } else if (key == "truncation_margin") {
            cfg.quad.truncation_margin = parse_real(value, source, line);
        } else if (key == "workers") {
            const long w = parse_integer(value, source, line);
            if (w < 1) {
                throw ConfigError(source, line, "workers must be >= 1");
            }
            cfg.workers = static_cast<unsigned>(w);
        } else if (key == "tolerance") {
            const double t = parse_real(value, source, line);
            if (!(t > 0.0)) {
                throw ConfigError(source, line, "tolerance must be > 0");
            }
            cfg.tolerance_override = t;
        } else if (key.starts_with("grid.")) {
            // grid.<op id>.<param>; the op id itself contains dots.
            const auto dot = key.rfind('.');
            if (dot <= 5 || dot + 1 == key.size()) {
                throw ConfigError(source, line, "grid key must be grid.<op>.<param>");
            }
            const std::string op = key.substr(5, dot - 5);
            const std::string param = key.substr(dot + 1);
            std::vector<double> values;
            std::stringstream ss(value);
            std::string item;
            while (std::getline(ss, item, ',')) {
                values.push_back(parse_real(trim(item), source, line));
            }
            if (values.empty()) {
                throw ConfigError(source, line, "grid override needs at least one value");
            }
            cfg.grid[op][param] = std::move(values);
        } else {
            throw ConfigError(source, line, "unknown key '" + key + "'");
        }
    }
    try {
        cfg.quad.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(source, line, e.what());
    }
    return cfg;
}

LabConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(path.string(), 0, "cannot open config file");
    }
    return parse_config(in, path.string());
}

std::string canonical_text(const LabConfig& cfg) {
    std::ostringstream out;
    out << "abs_tol=" << format_real(cfg.quad.abs_tol) << '\n'
        << "rel_tol=" << format_real(cfg.quad.rel_tol) << '\n'
        << "max_refinement=" << cfg.quad.max_refinement << '\n'
        << "truncation_margin=" << format_real(cfg.quad.truncation_margin) << '\n';
    if (cfg.tolerance_override) {
        out << "tolerance=" << format_real(*cfg.tolerance_override) << '\n';
    }
    // The worker count does not change any result, so it is left out.
    for (const auto& [op, axes] : cfg.grid) {
        for (const auto& [param, values] : axes) {
            out << "grid." << op << '.' << param << '=';
            for (std::size_t i = 0; i < values.size(); ++i) {
                out << (i ? "," : "") << format_real(values[i]);
            }
            out << '\n';
        }
    }
    return out.str();
}

}  // namespace mordell::lab
