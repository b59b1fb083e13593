// diagmon: command-line front end over the C API.
#include "diagmon/diagmon.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::json;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kValidation = 3, kInternal = 4 };

struct CliError {
    int code;
};

int exit_code(dm_status s)
{
    switch (s) {
    case DM_OK: return kOk;
    case DM_E_USAGE: return kUsage;
    case DM_E_VALIDATION: return kValidation;
    case DM_E_INTERNAL: break;
    }
    return kInternal;
}

void check(dm_status s)
{
    if (s != DM_OK) {
        std::cerr << "error: " << dm_last_error() << '\n';
        throw CliError{exit_code(s)};
    }
}

struct StringDeleter {
    void operator()(char* s) const { dm_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct ValueDeleter {
    void operator()(dm_value* v) const { dm_value_free(v); }
};
using OwnedValue = std::unique_ptr<dm_value, ValueDeleter>;

struct ReportDeleter {
    void operator()(dm_report* r) const { dm_report_free(r); }
};

Json take_json(char* raw)
{
    const OwnedString s(raw);
    return Json::parse(s.get());
}

std::string read_input(const std::string& path)
{
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read " << path << '\n';
        throw CliError{kUsage};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

OwnedValue load(const std::string& category, const std::string& path)
{
    dm_value* v = nullptr;
    const auto status = dm_value_parse(category.c_str(), read_input(path).c_str(), &v);
    if (status != DM_OK) {
        std::cerr << path << ": ";
    }
    check(status);
    return OwnedValue(v);
}

Json value_json(const dm_value* v)
{
    char* out = nullptr;
    check(dm_value_to_json(v, &out));
    return take_json(out);
}

int cmd_compose(const std::string& category, const std::vector<std::string>& files)
{
    OwnedValue acc = load(category, files.front());
    Json diagnostics = Json::array();
    for (std::size_t i = 1; i < files.size(); ++i) {
        const OwnedValue next = load(category, files[i]);
        dm_value* product = nullptr;
        char* diag = nullptr;
        check(dm_compose(acc.get(), next.get(), &product, &diag));
        acc.reset(product);
        diagnostics.push_back(take_json(diag));
    }
    const Json out{{"category", category},
                   {"product", value_json(acc.get())},
                   {"diagnostics", diagnostics.size() == 1 ? diagnostics.front() : diagnostics}};
    std::cout << out.dump() << '\n';
    return kOk;
}

int cmd_involution(const std::string& category, const std::string& which, const std::string& file)
{
    const OwnedValue v = load(category, file);
    dm_value* image = nullptr;
    check(dm_involution(v.get(), which.c_str(), &image));
    const OwnedValue owned(image);
    std::cout << Json{{"category", category}, {"involution", which}, {"value", value_json(owned.get())}}.dump()
              << '\n';
    return kOk;
}

int cmd_check(const std::string& identity, const std::string& monoid, const dm_check_options& options)
{
    char* out = nullptr;
    check(dm_check_identity(identity.c_str(), monoid.c_str(), &options, &out));
    const Json verdict = take_json(out);
    std::cout << verdict.dump() << '\n';
    return verdict.at("status") == "fails" ? kFailed : kOk;
}

int cmd_normalform(const std::string& word, bool canonical, bool digit_exponents)
{
    char* out = nullptr;
    check(dm_normal_form(word.c_str(), canonical ? 1 : 0, digit_exponents ? 1 : 0, &out));
    std::cout << take_json(out).dump() << '\n';
    return kOk;
}

int cmd_idempotents(int n, const std::string& category)
{
    char* out = nullptr;
    check(dm_idempotents(n, category.c_str(), &out));
    std::cout << take_json(out).dump() << '\n';
    return kOk;
}

int cmd_suite(std::uint64_t seed, const std::string& filter, bool json, bool serial)
{
    if (!json) {
        std::cout << "seed " << seed << std::endl;
    }
    dm_progress_fn progress = nullptr;
    if (!json) {
        progress = [](const char* line, void*) { std::cout << line << std::endl; };
    }
    dm_report* raw = nullptr;
    check(dm_suite_run(seed, filter.c_str(), serial ? 0 : 1, progress, nullptr, &raw));
    const std::unique_ptr<dm_report, ReportDeleter> report(raw);
    if (json) {
        char* out = nullptr;
        check(dm_report_to_json(report.get(), &out));
        std::cout << take_json(out).dump(2) << '\n';
    } else {
        std::size_t failed = 0;
        for (std::size_t i = 0; i < dm_report_size(report.get()); ++i) {
            failed += dm_report_status(report.get(), i) == DM_CHECK_FAIL ? 1 : 0;
        }
        std::cout << dm_report_size(report.get()) << " entries, " << failed << " failed\n";
    }
    return dm_report_passed(report.get()) != 0 ? kOk : kFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Diagram monoids: composition, involutions, identities and the acceptance suite"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(dm_version()));
    int result = kOk;

    std::string category;
    std::vector<std::string> files;
    auto* compose = app.add_subcommand("compose", "Compose values read from JSON files ('-' for stdin)");
    compose->add_option("category", category, "P, Pd, Pd-bar, Cob, Cob-bar, Cob0, Cob0-bar, aTLe, aTL, aTLd, Ann, Annd")
        ->required();
    compose->add_option("files", files, "Two or more operands, multiplied left to right")->required()->expected(2, -1);
    compose->callback([&] { result = cmd_compose(category, files); });

    std::string which;
    std::string file;
    auto* involution = app.add_subcommand("involution", "Apply star, sigma or rho to a value");
    involution->add_option("category", category)->required();
    involution->add_option("which", which, "star, sigma or rho")->required();
    involution->add_option("file", file)->required();
    involution->callback([&] { result = cmd_involution(category, which, file); });

    std::string identity;
    std::string monoid;
    dm_check_options options = dm_check_options_default();
    bool criterion = false;
    bool search = false;
    bool digit_exponents = false;
    auto* check_cmd = app.add_subcommand("check", "Decide or search an identity in a monoid");
    check_cmd->add_option("identity", identity, "u = v, or @nested, @interleaved, @cube, @zimin3, @zimin4-candidate")
        ->required();
    check_cmd->add_option("monoid", monoid, "M, N, A21, Ann<n>, Cob<n>-fiber, Ann<n>-fiber, twisted, rees")
        ->required();
    auto* crit = check_cmd->add_flag("--criterion", criterion, "Use the decision criterion (M and N)");
    check_cmd->add_flag("--search", search, "Search substitutions from the witness pool")->excludes(crit);
    check_cmd->add_option("--budget", options.budget, "Substitutions to try")->capture_default_str();
    check_cmd->add_option("--seed", options.seed, "Seed for random substitutions")->capture_default_str();
    check_cmd->add_flag("--digit-exponents", digit_exponents, "Read x3 as xxx");
    check_cmd->callback([&] {
        options.mode = criterion ? DM_CHECK_CRITERION : search ? DM_CHECK_SEARCH : DM_CHECK_AUTO;
        options.digit_exponents = digit_exponents ? 1 : 0;
        result = cmd_check(identity, monoid, options);
    });

    std::string word;
    bool canonical = false;
    auto* nf = app.add_subcommand("normalform", "Normal form and extreme decomposition of a word");
    nf->add_option("word", word)->required();
    nf->add_flag("--canonical", canonical, "Canonical form for the parity model instead");
    nf->add_flag("--digit-exponents", digit_exponents, "Read x3 as xxx");
    nf->callback([&] { result = cmd_normalform(word, canonical, digit_exponents); });

    int n = 0;
    auto* idem = app.add_subcommand("idempotents", "List idempotents with their irreducible decompositions");
    idem->add_option("n", n)->required();
    idem->add_option("category", category, "P or Ann")->required();
    idem->callback([&] { result = cmd_idempotents(n, category); });

    std::uint64_t seed = 0;
    std::string filter;
    bool json = false;
    bool serial = false;
    auto* suite = app.add_subcommand("suite", "Run the acceptance battery");
    suite->add_option("--filter", filter, "Comma-separated ids or anchor substrings");
    suite->add_option("--seed", seed)->capture_default_str();
    suite->add_flag("--json", json, "Print the report as JSON");
    suite->add_flag("--serial", serial, "Run checks one at a time");
    suite->callback([&] { result = cmd_suite(seed, filter, json, serial); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    } catch (const CliError& e) {
        return e.code;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInternal;
    }
    return result;
}
