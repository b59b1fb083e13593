#include "diagmon/suite.hpp"

#include "diagmon/error.hpp"

#include <chrono>
#include <cstdio>
#include <future>
#include <mutex>
#include <sstream>

namespace diagmon {

namespace {

bool selected(const SuiteCheck& c, std::string_view filter)
{
    if (filter.empty()) {
        return true;
    }
    std::size_t start = 0;
    while (start <= filter.size()) {
        const auto end = std::min(filter.find(',', start), filter.size());
        const auto term = filter.substr(start, end - start);
        if (!term.empty() && (c.id.find(term) != std::string::npos || c.anchor.find(term) != std::string::npos)) {
            return true;
        }
        start = end + 1;
    }
    return false;
}

ReportEntry run_one(const SuiteCheck& c, std::uint64_t seed)
{
    ReportEntry e{c.id, c.anchor, CheckStatus::Fail, {}, 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        auto outcome = c.run(seed);
        e.status = outcome.passed ? CheckStatus::Pass : CheckStatus::Fail;
        e.detail = std::move(outcome.detail);
    } catch (const std::exception& ex) {
        e.detail = std::string("exception: ") + ex.what();
    }
    e.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return e;
}

} // namespace

std::string_view to_string(CheckStatus s) noexcept
{
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

std::size_t Report::count(CheckStatus s) const noexcept
{
    std::size_t n = 0;
    for (const auto& e : entries) {
        n += e.status == s ? 1 : 0;
    }
    return n;
}

Report run_suite(const SuiteOptions& options)
{
    const auto& checks = suite_checks();
    Report report;
    report.seed = options.seed;
    report.entries.resize(checks.size());
    std::mutex progress_mutex;
    auto finish = [&](std::size_t i, ReportEntry e) {
        if (options.progress) {
            const std::lock_guard lock(progress_mutex);
            options.progress(e);
        }
        report.entries[i] = std::move(e);
    };

    std::vector<std::future<void>> running;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const auto& c = checks[i];
        if (!selected(c, options.filter)) {
            finish(i, {c.id, c.anchor, CheckStatus::Skipped, "not selected by filter", 0});
            continue;
        }
        if (options.parallel) {
            running.push_back(std::async(std::launch::async, [&, i] { finish(i, run_one(checks[i], options.seed)); }));
        } else {
            finish(i, run_one(c, options.seed));
        }
    }
    for (auto& f : running) {
        f.get();
    }
    return report;
}

Json to_json(const Report& r)
{
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        entries.push_back({{"id", e.id},
                           {"anchor", e.anchor},
                           {"status", to_string(e.status)},
                           {"detail", e.detail},
                           {"elapsed", e.elapsed}});
    }
    return {{"schema", "report_v1"},
            {"seed", r.seed},
            {"passed", r.count(CheckStatus::Pass)},
            {"failed", r.count(CheckStatus::Fail)},
            {"skipped", r.count(CheckStatus::Skipped)},
            {"entries", std::move(entries)}};
}

std::string format_line(const ReportEntry& e)
{
    const char* tag = e.status == CheckStatus::Pass ? "PASS" : e.status == CheckStatus::Fail ? "FAIL" : "SKIP";
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.2fs", e.elapsed);
    std::ostringstream out;
    out << tag << ' ' << e.id << ' ' << e.anchor << " (" << elapsed << ')';
    if (!e.detail.empty()) {
        out << ": " << e.detail;
    }
    return out.str();
}

} // namespace diagmon
