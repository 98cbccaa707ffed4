#include "mordell/lab/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace mordell::lab {

namespace {

quad::QuadConfig config_for(const OpSpec& op, const LabConfig& cfg) {
    return op.tight ? cfg.quad.tightened(100.0) : cfg.quad;
}

std::string csv_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

unsigned resolve_workers(std::optional<unsigned> requested, const LabConfig& cfg) {
    if (requested) {
        if (*requested == 0) {
            throw std::invalid_argument("workers must be >= 1");
        }
        return *requested;
    }
    if (cfg.workers) {
        return *cfg.workers;
    }
    if (const char* env = std::getenv("MORDELL_LAB_WORKERS"); env && *env) {
        char* end = nullptr;
        const long w = std::strtol(env, &end, 10);
        if (*end != '\0' || w < 1) {
            throw std::invalid_argument(std::string("MORDELL_LAB_WORKERS must be a positive integer, got '") +
                                        env + "'");
        }
        return static_cast<unsigned>(w);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

CaseResult run_case(const IdentityCase& c, const LabConfig& cfg) {
    CaseResult r;
    r.id = c.id();
    r.params = c.params;
    r.tolerance = c.tolerance;
    const auto start = std::chrono::steady_clock::now();
    {
        quad::EvaluationTally tally;
        try {
            const Outcome o = c.op->eval(c.params, config_for(*c.op, cfg));
            r.computed = o.computed;
            r.expected = o.expected;
            r.residual = o.residual();
            r.passed = std::isfinite(r.residual) && r.residual <= c.tolerance;
        } catch (const std::exception& e) {
            r.error = e.what();
            r.residual = std::numeric_limits<double>::quiet_NaN();
            r.passed = false;
        }
        r.evaluations = tally.count();
    }
    r.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

VerificationReport run_suite(const std::string& suite, const LabConfig& cfg, unsigned workers) {
    const auto cases = expand_suite(suite, cfg);
    VerificationReport report;
    report.suite = suite;
    report.cases.resize(cases.size());

    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            report.cases[i] = run_case(cases[i], cfg);
        }
    };
    const unsigned n_threads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(cases.size())));
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) {
            pool.emplace_back(worker);
        }
    }

    std::stable_sort(report.cases.begin(), report.cases.end(), [](const CaseResult& a, const CaseResult& b) {
        return std::tie(a.id, a.params) < std::tie(b.id, b.params);
    });

    std::string fingerprint_text = canonical_text(cfg) + "suite=" + suite + '\n';
    for (const auto& c : cases) {
        fingerprint_text += c.id();
        for (const auto& [k, v] : c.params) {
            fingerprint_text += ' ' + k + '=' + csv_real(v);
        }
        fingerprint_text += " tol=" + csv_real(c.tolerance) + '\n';
    }
    report.config_fingerprint = fnv1a_hex(fingerprint_text);

    report.summary.total = report.cases.size();
    report.summary.passed = static_cast<std::size_t>(
        std::count_if(report.cases.begin(), report.cases.end(), [](const CaseResult& c) { return c.passed; }));
    report.summary.failed = report.summary.total - report.summary.passed;
    return report;
}

void sweep(const std::string& op_text, const std::string& param, const SweepRange& range,
           const LabConfig& cfg, std::ostream& out) {
    const auto ref = resolve_op(op_text);
    if (!(range.lo < range.hi)) {
        throw std::invalid_argument("sweep: need lo < hi");
    }
    if (range.count < 2) {
        throw std::invalid_argument("sweep: need count >= 2");
    }
    const auto& axes = ref.op->axes;
    if (std::none_of(axes.begin(), axes.end(), [&](const auto& a) { return a.first == param; })) {
        throw std::invalid_argument("sweep: '" + ref.op->id + "' has no parameter '" + param + "'");
    }
    Params base;
    for (const auto& [name, values] : axes) {
        base[name] = values.front();
    }
    for (const auto& [name, v] : ref.pinned) {
        base[name] = v;
    }
    const double tolerance = cfg.tolerance_override.value_or(ref.op->tolerance);

    out << "param_value,computed,expected,residual\n";
    for (std::size_t i = 0; i < range.count; ++i) {
        const double v = (i + 1 == range.count)
                             ? range.hi
                             : range.lo + (range.hi - range.lo) * static_cast<double>(i) /
                                              static_cast<double>(range.count - 1);
        Params p = base;
        p[param] = v;
        const auto r = run_case({ref.op, p, tolerance}, cfg);
        if (r.error) {
            throw std::runtime_error("sweep: " + ref.op->id + " failed at " + param + "=" + csv_real(v) + ": " +
                                     *r.error);
        }
        out << csv_real(v) << ',' << csv_real(r.computed) << ',' << (r.expected ? csv_real(*r.expected) : "")
            << ',' << csv_real(r.residual) << '\n';
    }
}

}  // namespace mordell::lab
