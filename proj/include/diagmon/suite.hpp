// The acceptance battery: one entry per criterion, run under a fixed seed.
#pragma once

#include "diagmon/json_io.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace diagmon {

enum class CheckStatus { Pass, Fail, Skipped };
std::string_view to_string(CheckStatus s) noexcept;

struct CheckOutcome {
    bool passed = false;
    std::string detail;
};

struct SuiteCheck {
    std::string id;
    std::string anchor;
    std::function<CheckOutcome(std::uint64_t seed)> run;
};

// The registered criteria, in report order.
const std::vector<SuiteCheck>& suite_checks();

struct ReportEntry {
    std::string id;
    std::string anchor;
    CheckStatus status = CheckStatus::Skipped;
    std::string detail;
    double elapsed = 0; // seconds
};

struct Report {
    std::uint64_t seed = 0;
    std::vector<ReportEntry> entries;

    std::size_t count(CheckStatus s) const noexcept;
    bool passed() const noexcept { return count(CheckStatus::Fail) == 0; }
};

struct SuiteOptions {
    std::uint64_t seed = 0;
    // Comma-separated ids or substrings of ids/anchors; empty runs everything.
    std::string filter;
    bool parallel = true;
    // Called after each check finishes, in completion order.
    std::function<void(const ReportEntry&)> progress;
};

Report run_suite(const SuiteOptions& options = {});

Json to_json(const Report& r);
// One line per entry: "PASS c01 <anchor> (1.2s) <detail>".
std::string format_line(const ReportEntry& e);

} // namespace diagmon
