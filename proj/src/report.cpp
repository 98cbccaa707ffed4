#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

#include "json.hpp"
#include "mordell/lab/suite.hpp"

namespace mordell::lab {

namespace {

using nlohmann::json;

void write_string(std::string& out, const std::string& s) {
    out += json(s).dump();  // nlohmann handles escaping
}

// nlohmann::json objects are std::map backed, so keys come out sorted. Floats
// are printed with %.17g so that every report byte is reproducible.
void write(std::string& out, const json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                out += first ? "" : ",\n";
                first = false;
                out += inner;
                write_string(out, key);
                out += ": ";
                write(out, value, indent + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                out += i ? ",\n" : "";
                out += inner;
                write(out, j[i], indent + 1);
            }
            out += "\n" + pad + "]";
            return;
        }
        case json::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) {
                out += "null";
                return;
            }
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out += buf;
            return;
        }
        default:
            out += j.dump();
    }
}

}  // namespace

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string report_json(const VerificationReport& report, bool include_timings) {
    json cases = json::array();
    for (const auto& c : report.cases) {
        json entry;
        entry["id"] = c.id;
        entry["params"] = json::object();
        for (const auto& [k, v] : c.params) {
            entry["params"][k] = v;
        }
        entry["computed"] = c.computed;
        entry["expected"] = c.expected ? json(*c.expected) : json("pairwise");
        entry["residual"] = c.residual;
        entry["tolerance"] = c.tolerance;
        entry["passed"] = c.passed;
        entry["evaluations"] = c.evaluations;
        if (include_timings) {
            entry["wall_time_ms"] = c.wall_time_ms;
        }
        if (c.error) {
            entry["error"] = *c.error;
        }
        cases.push_back(std::move(entry));
    }
    json root;
    root["suite"] = report.suite;
    root["cases"] = std::move(cases);
    root["summary"] = {{"total", report.summary.total},
                       {"passed", report.summary.passed},
                       {"failed", report.summary.failed}};
    root["config_fingerprint"] = report.config_fingerprint;

    std::string out;
    write(out, root, 0);
    out += '\n';
    return out;
}

}  // namespace mordell::lab
