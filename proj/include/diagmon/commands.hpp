// Request-level operations behind the C API and the command line. Each takes
// text input and returns a JSON document; failures throw Error.
#pragma once

#include "diagmon/json_io.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace diagmon {

enum class CheckMode { Auto, Criterion, Search };

struct CheckRequest {
    std::string identity; // "u = v", or an alias such as @nested
    // M, N, A21, Ann<n>, Cob<n>-fiber, Ann<n>-fiber, twisted, rees
    std::string monoid;
    CheckMode mode = CheckMode::Auto;
    std::uint64_t budget = 1'000'000;
    std::uint64_t seed = 0;
    bool digit_exponents = false;
};

// Named identities accepted in place of "u = v".
std::string expand_alias(std::string_view text);

// {"identity","monoid","status":"holds|fails|unknown","evidence","witness","tried","note","seed"}
Json run_check(const CheckRequest& request);

// {"word","form","extremes","blocks"}; blocks use exponent notation, "1" for empty.
Json normal_form_report(std::string_view word, bool canonical, bool digit_exponents = false);

// {"category","n","count","idempotents":[{"value","components":[{"points","rank"}]}]}
// for the square partitions (P) or the annular monoid (Ann) on n points.
Json idempotents_report(int n, Category category);

} // namespace diagmon
