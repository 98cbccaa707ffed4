// mordell_lab: run identity suites and parameter sweeps.
//
//   mordell_lab verify --suite <name> [--config <path>] [--report <path>] [--workers N] [--timings]
//   mordell_lab sweep --op <id> --param <name> --lo <v> --hi <v> --count <n> --out <path>
//
// Exit status: 0 all cases passed, 1 some case failed, 2 usage or config error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mordell/lab/config.hpp"
#include "mordell/lab/registry.hpp"
#include "mordell/lab/suite.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

mordell::lab::LabConfig load(const std::string& path) {
    return path.empty() ? mordell::lab::LabConfig{} : mordell::lab::load_config(path);
}

void print_summary(const mordell::lab::VerificationReport& report) {
    for (const auto& c : report.cases) {
        if (c.passed) {
            continue;
        }
        std::cerr << "FAIL " << c.id;
        for (const auto& [k, v] : c.params) {
            std::cerr << ' ' << k << '=' << v;
        }
        if (c.error) {
            std::cerr << " error: " << *c.error;
        } else {
            std::cerr << " residual=" << c.residual << " tolerance=" << c.tolerance;
        }
        std::cerr << '\n';
    }
    std::cerr << report.suite << ": " << report.summary.passed << '/' << report.summary.total << " passed\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification of Mordell-type integral identities"};
    app.require_subcommand(1);

    std::string suite;
    std::string config_path;
    std::string report_path;
    std::optional<unsigned> workers;
    bool timings = false;
    auto* verify = app.add_subcommand("verify", "Run an identity suite and emit a JSON report");
    verify->add_option("--suite", suite, "Suite name")
        ->required()
        ->check(CLI::IsMember(mordell::lab::suite_names()));
    verify->add_option("--config", config_path, "key=value config file");
    verify->add_option("--report", report_path, "Write the JSON report here (default: stdout)");
    verify->add_option("--workers", workers, "Worker threads (fallback: MORDELL_LAB_WORKERS)")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--timings", timings, "Include per-case wall times (breaks byte determinism)");

    std::string op;
    std::string param;
    double lo = 0.0;
    double hi = 0.0;
    std::size_t count = 0;
    std::string out_path;
    std::string sweep_config;
    auto* sweep = app.add_subcommand("sweep", "Evaluate one operation over a parameter range, write CSV");
    sweep->add_option("--op", op, "Operation id, optionally with pins: id[k=v,...]")->required();
    sweep->add_option("--param", param, "Parameter to vary")->required();
    sweep->add_option("--lo", lo, "Lower end")->required();
    sweep->add_option("--hi", hi, "Upper end")->required();
    sweep->add_option("--count", count, "Number of points (>= 2)")->required();
    sweep->add_option("--out", out_path, "CSV output path")->required();
    sweep->add_option("--config", sweep_config, "key=value config file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }

    try {
        if (*verify) {
            const auto cfg = load(config_path);
            const unsigned n = mordell::lab::resolve_workers(workers, cfg);
            const auto report = mordell::lab::run_suite(suite, cfg, n);
            const std::string text = mordell::lab::report_json(report, timings);
            if (report_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream f(report_path, std::ios::binary);
                f << text;
                if (!f) {
                    std::cerr << "error: cannot write report to " << report_path << '\n';
                    return kUsage;
                }
            }
            print_summary(report);
            return report.summary.failed == 0 ? kPass : kFail;
        }

        const auto cfg = load(sweep_config);
        std::ostringstream csv;
        mordell::lab::sweep(op, param, {lo, hi, count}, cfg, csv);
        std::ofstream f(out_path, std::ios::binary);
        f << csv.str();
        if (!f) {
            std::cerr << "error: cannot write " << out_path << '\n';
            return kUsage;
        }
        return kPass;
    } catch (const mordell::lab::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
}
