#include "diagmon/diagmon.h"

#include "diagmon/commands.hpp"
#include "diagmon/error.hpp"
#include "diagmon/json_io.hpp"
#include "diagmon/suite.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

struct dm_value {
    diagmon::Category category;
    diagmon::Value value;
};

struct dm_report {
    diagmon::Report report;
    std::vector<std::string> lines;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_error_name;

dm_status record(dm_status status, std::string name, std::string message)
{
    last_error_name = std::move(name);
    last_error = std::move(message);
    return status;
}

dm_status status_of(diagmon::ErrorCode code)
{
    switch (diagmon::error_class(code)) {
    case diagmon::ErrorClass::Usage: return DM_E_USAGE;
    case diagmon::ErrorClass::Validation: return DM_E_VALIDATION;
    case diagmon::ErrorClass::Internal: break;
    }
    return DM_E_INTERNAL;
}

template <class F>
dm_status guarded(F&& f)
{
    try {
        f();
        return record(DM_OK, {}, {});
    } catch (const diagmon::Error& e) {
        return record(status_of(e.code()), std::string(diagmon::error_name(e.code())), e.what());
    } catch (const std::exception& e) {
        return record(DM_E_INTERNAL, "Internal", e.what());
    } catch (...) {
        return record(DM_E_INTERNAL, "Internal", "unknown exception");
    }
}

void need(const void* p, const char* what)
{
    diagmon::require(p != nullptr, diagmon::ErrorCode::Parse, std::string("null argument: ") + what);
}

char* copy_string(const std::string& s)
{
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    diagmon::require(out != nullptr, diagmon::ErrorCode::Internal, "out of memory");
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

const char* dm_version(void) { return "0.1.0"; }
const char* dm_last_error(void) { return last_error.c_str(); }
const char* dm_last_error_name(void) { return last_error_name.c_str(); }
void dm_string_free(char* s) { std::free(s); }

dm_status dm_value_parse(const char* category, const char* json, dm_value** out)
{
    return guarded([&] {
        need(category, "category");
        need(json, "json");
        need(out, "out");
        const auto c = diagmon::parse_category(category);
        *out = new dm_value{c, diagmon::parse_value(c, json)};
    });
}

void dm_value_free(dm_value* v) { delete v; }

dm_status dm_value_to_json(const dm_value* v, char** out)
{
    return guarded([&] {
        need(v, "value");
        need(out, "out");
        *out = copy_string(diagmon::print_value(v->value));
    });
}

const char* dm_value_category(const dm_value* v)
{
    return v == nullptr ? "" : diagmon::category_name(v->category).data();
}

dm_status dm_compose(const dm_value* x, const dm_value* y, dm_value** product, char** diagnostics)
{
    return guarded([&] {
        need(x, "x");
        need(y, "y");
        need(product, "product");
        diagmon::require(x->category == y->category, diagmon::ErrorCode::UnknownCategory,
                         "operands belong to different categories");
        auto r = diagmon::compose_values(x->category, x->value, y->value);
        char* diag = diagnostics != nullptr ? copy_string(r.diagnostics.dump()) : nullptr;
        *product = new dm_value{x->category, std::move(r.product)};
        if (diagnostics != nullptr) {
            *diagnostics = diag;
        }
    });
}

dm_status dm_involution(const dm_value* v, const char* which, dm_value** out)
{
    return guarded([&] {
        need(v, "value");
        need(which, "which");
        need(out, "out");
        const auto inv = diagmon::parse_involution(which);
        *out = new dm_value{v->category, diagmon::apply_involution(v->category, inv, v->value)};
    });
}

dm_check_options dm_check_options_default(void) { return {DM_CHECK_AUTO, 1'000'000, 0, 0}; }

dm_status dm_check_identity(const char* identity, const char* monoid, const dm_check_options* options,
                            char** verdict)
{
    return guarded([&] {
        need(identity, "identity");
        need(monoid, "monoid");
        need(verdict, "verdict");
        const dm_check_options o = options != nullptr ? *options : dm_check_options_default();
        diagmon::CheckRequest request;
        request.identity = identity;
        request.monoid = monoid;
        switch (o.mode) {
        case DM_CHECK_AUTO: request.mode = diagmon::CheckMode::Auto; break;
        case DM_CHECK_CRITERION: request.mode = diagmon::CheckMode::Criterion; break;
        case DM_CHECK_SEARCH: request.mode = diagmon::CheckMode::Search; break;
        default: diagmon::fail(diagmon::ErrorCode::Parse, "unknown check mode");
        }
        request.budget = o.budget;
        request.seed = o.seed;
        request.digit_exponents = o.digit_exponents != 0;
        *verdict = copy_string(diagmon::run_check(request).dump());
    });
}

dm_status dm_normal_form(const char* word, int canonical, int digit_exponents, char** out)
{
    return guarded([&] {
        need(word, "word");
        need(out, "out");
        *out = copy_string(diagmon::normal_form_report(word, canonical != 0, digit_exponents != 0).dump());
    });
}

dm_status dm_idempotents(int n, const char* category, char** out)
{
    return guarded([&] {
        need(category, "category");
        need(out, "out");
        *out = copy_string(diagmon::idempotents_report(n, diagmon::parse_category(category)).dump());
    });
}

dm_status dm_suite_run(uint64_t seed, const char* filter, int parallel, dm_progress_fn progress, void* user,
                       dm_report** out)
{
    return guarded([&] {
        need(out, "out");
        diagmon::SuiteOptions options;
        options.seed = seed;
        options.filter = filter != nullptr ? filter : "";
        options.parallel = parallel != 0;
        if (progress != nullptr) {
            options.progress = [progress, user](const diagmon::ReportEntry& e) {
                progress(diagmon::format_line(e).c_str(), user);
            };
        }
        auto r = std::make_unique<dm_report>();
        r->report = diagmon::run_suite(options);
        for (const auto& e : r->report.entries) {
            r->lines.push_back(diagmon::format_line(e));
        }
        *out = r.release();
    });
}

void dm_report_free(dm_report* r) { delete r; }

size_t dm_report_size(const dm_report* r) { return r == nullptr ? 0 : r->report.entries.size(); }

int dm_report_passed(const dm_report* r) { return r != nullptr && r->report.passed() ? 1 : 0; }

dm_check_status dm_report_status(const dm_report* r, size_t i)
{
    if (r == nullptr || i >= r->report.entries.size()) {
        return DM_CHECK_SKIPPED;
    }
    switch (r->report.entries[i].status) {
    case diagmon::CheckStatus::Pass: return DM_CHECK_PASS;
    case diagmon::CheckStatus::Fail: return DM_CHECK_FAIL;
    case diagmon::CheckStatus::Skipped: break;
    }
    return DM_CHECK_SKIPPED;
}

const char* dm_report_id(const dm_report* r, size_t i)
{
    return r == nullptr || i >= r->report.entries.size() ? nullptr : r->report.entries[i].id.c_str();
}

const char* dm_report_line(const dm_report* r, size_t i)
{
    return r == nullptr || i >= r->lines.size() ? nullptr : r->lines[i].c_str();
}

dm_status dm_report_to_json(const dm_report* r, char** out)
{
    return guarded([&] {
        need(r, "report");
        need(out, "out");
        *out = copy_string(diagmon::to_json(r->report).dump());
    });
}

} // extern "C"
