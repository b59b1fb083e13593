#include "diagmon/commands.hpp"

#include "diagmon/annular.hpp"
#include "diagmon/aux_monoids.hpp"
#include "diagmon/cobordism.hpp"
#include "diagmon/error.hpp"
#include "diagmon/identities.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <optional>

namespace diagmon {

namespace {

struct Alias {
    std::string_view name;
    std::string_view text;
};

constexpr Alias kAliases[] = {
    {"@nested", "x1x3x2x4x1x2x5x2x6x1 = x1x3x2x4x2x1x5x2x6x1"},
    {"@interleaved", "x1x3x2x4x1x2x5x1x6x2 = x1x3x2x4x2x1x5x1x6x2"},
    {"@cube", "x^3yx = xyx^3"},
    {"@zimin3", "x1x2x1x3x1x2x1 = x1x3x1x2x1x2x1"},
    {"@zimin4-candidate", "x1x2x1x3x1x2x1x4x1x2x1x3x1x2x1 = x1x2x1x3x2x1x1x4x1x2x1x3x1x2x1"},
};

std::string lower(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

std::optional<int> number_between(std::string_view s, std::string_view prefix, std::string_view suffix)
{
    if (s.size() <= prefix.size() + suffix.size() || !s.starts_with(prefix) || !s.ends_with(suffix)) {
        return std::nullopt;
    }
    const auto digits = s.substr(prefix.size(), s.size() - prefix.size() - suffix.size());
    int n = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || end != digits.data() + digits.size()) {
        return std::nullopt;
    }
    return n;
}

const char* status_name(Verdict::Status s)
{
    switch (s) {
    case Verdict::Status::Holds: return "holds";
    case Verdict::Status::Fails: return "fails";
    case Verdict::Status::Unknown: return "unknown";
    }
    return "unknown";
}

Json evidence_json(Verdict::Evidence e)
{
    switch (e) {
    case Verdict::Evidence::Exhausted: return "exhausted";
    case Verdict::Evidence::Criterion: return "criterion";
    case Verdict::Evidence::None: break;
    }
    return nullptr;
}

template <class T>
void products_of(std::vector<T>& pool, const std::function<T(const T&, const T&)>& mul)
{
    const std::size_t gens = pool.size();
    for (std::size_t i = 0; i < gens; ++i) {
        for (std::size_t j = 0; j < gens; ++j) {
            T p = mul(pool[i], pool[j]);
            if (std::find(pool.begin(), pool.end(), p) == pool.end()) {
                pool.push_back(std::move(p));
            }
        }
    }
}

struct Search {
    Verdict verdict;
    std::vector<std::string> witness; // printed values, one per letter
};

template <class M, class Show>
Search search(const Identity& id, const M& m, const std::vector<typename M::value_type>& pool,
              const CheckOptions& options, Show show)
{
    Search s{check_identity(id, m, std::span<const typename M::value_type>(pool), options), {}};
    for (std::size_t idx : s.verdict.witness) {
        s.witness.push_back(show(pool[idx]));
    }
    return s;
}

template <class Ext>
std::string show_extension(const typename Ext::Element& e)
{
    if (const auto* s = std::get_if<0>(&e.value)) {
        return std::to_string(*s);
    }
    const auto& [l, r] = std::get<1>(e.value);
    return "(" + std::to_string(l) + "," + std::to_string(r) + ")";
}

std::vector<Partition> fiber_bases(int n, bool annular_only)
{
    require(n >= 1 && n <= 4, ErrorCode::UnknownMonoid, "fiber monoids are available for 1 <= n <= 4");
    std::vector<Partition> out;
    for (const auto& p : enumerate_partitions(n, n)) {
        if (compose(p, p) == p && is_irreducible(p) && (!annular_only || shared_ann_monoid(n).contains(p))) {
            out.push_back(p);
        }
    }
    return out;
}

// Non-regular cobordisms over one base with genus labels in {0,1} and at most
// one closed component of genus 0 or 1.
std::vector<Cobordism> fiber_pool(const Partition& base)
{
    std::vector<ClosedSpectrum> spectra(3);
    spectra[1].add(0, 1);
    spectra[2].add(1, 1);
    std::vector<Cobordism> out;
    const auto blocks = static_cast<std::size_t>(base.block_count());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << blocks); ++mask) {
        SmallVec<Genus> g;
        for (std::size_t b = 0; b < blocks; ++b) {
            g.push_back(static_cast<Genus>((mask >> b) & 1U));
        }
        for (const auto& s : spectra) {
            out.push_back(make_cobordism(base, g, s, false));
        }
    }
    return out;
}

struct CobordismOps {
    using value_type = Cobordism;
    value_type mul(const value_type& a, const value_type& b) const { return compose(a, b); }
};

Search search_fibers(const Identity& id, int n, bool annular_only, const CheckOptions& options)
{
    const auto bases = fiber_bases(n, annular_only);
    require(!bases.empty(), ErrorCode::UnknownMonoid, "no irreducible idempotent bases on " + std::to_string(n) + " points");
    CheckOptions per_base = options;
    per_base.budget = std::max<std::uint64_t>(1, options.budget / bases.size());
    Search total{};
    for (const auto& base : bases) {
        auto s = search(id, CobordismOps{}, fiber_pool(base), per_base,
                        [](const Cobordism& c) { return to_string(c); });
        total.verdict.tried += s.verdict.tried;
        if (s.verdict.status == Verdict::Status::Fails) {
            s.verdict.tried = total.verdict.tried;
            s.verdict.note = "fiber over " + to_string(base);
            return s;
        }
    }
    total.verdict.note = "no witness in " + std::to_string(bases.size()) + " fibers";
    return total;
}

Search run_search(const Identity& id, const std::string& monoid, const CheckOptions& options)
{
    const std::string name = lower(monoid);
    if (name == "m") {
        const auto m = make_integer_extension();
        std::vector<IntegerExtension::Element> pool{m.unit(0), m.unit(1), m.unit(-1), m.pair(0, 0), m.pair(0, 1),
                                                     m.pair(1, 0)};
        return search(id, m, pool, options, show_extension<IntegerExtension>);
    }
    if (name == "n") {
        const auto m = make_parity_extension();
        std::vector<ParityExtension::Element> pool{m.unit(0), m.unit(1), m.unit(2), m.pair(0, 0),
                                                    m.pair(0, 1), m.pair(1, 0), m.pair(1, 1)};
        return search(id, m, pool, options, show_extension<ParityExtension>);
    }
    if (name == "a21") {
        const auto table = a21_monoid();
        std::vector<FiniteMonoid::Element> pool(table.size());
        for (std::size_t i = 0; i < pool.size(); ++i) {
            pool[i] = static_cast<FiniteMonoid::Element>(i);
        }
        CheckOptions complete = options;
        complete.pool_is_complete = true;
        return search(id, TableMonoid{&table}, pool, complete,
                      [](FiniteMonoid::Element e) { return to_string(static_cast<A21>(e)); });
    }
    if (const auto n = number_between(name, "ann", "")) {
        require(*n >= 1 && *n <= kAnnBound, ErrorCode::UnknownMonoid, "annular monoids are tabulated for 1 <= n <= 6");
        const auto& ann = shared_ann_monoid(*n);
        std::vector<FiniteMonoid::Element> pool(ann.monoid.size());
        for (std::size_t i = 0; i < pool.size(); ++i) {
            pool[i] = static_cast<FiniteMonoid::Element>(i);
        }
        CheckOptions complete = options;
        complete.pool_is_complete = true;
        return search(id, TableMonoid{&ann.monoid}, pool, complete,
                      [&](FiniteMonoid::Element e) { return to_string(ann.elements[e]); });
    }
    if (const auto n = number_between(name, "cob", "-fiber")) {
        return search_fibers(id, *n, false, options);
    }
    if (const auto n = number_between(name, "ann", "-fiber")) {
        return search_fibers(id, *n, true, options);
    }
    if (name == "twisted") {
        const TwistedMonoid m;
        const auto c = CircleForest::generator(1);
        std::vector<TwistedElement> pool{m.one(), {{}, {}, 1}, {c, {}, 0}, {{}, c, 0}, {c, {}, 1}};
        products_of<TwistedElement>(pool, [&](const auto& a, const auto& b) { return m.mul(a, b); });
        return search(id, m, pool, options, [](const TwistedElement& e) { return to_string(e); });
    }
    if (name == "rees") {
        const ReesSemigroup m;
        const auto c = CircleForest::generator(1);
        std::vector<ReesTriple> pool{{}, {{}, {}, c}, {c, {}, {}}, {{}, c, {}}};
        products_of<ReesTriple>(pool, [&](const auto& a, const auto& b) { return m.mul(a, b); });
        return search(id, m, pool, options, [](const ReesTriple& e) { return to_string(e); });
    }
    fail(ErrorCode::UnknownMonoid, "unknown monoid '" + monoid + "'");
}

std::string format_identity(const ParsedIdentity& p)
{
    return format_word(p.identity.lhs, p.alphabet) + " = " + format_word(p.identity.rhs, p.alphabet);
}

} // namespace

std::string expand_alias(std::string_view text)
{
    if (!text.starts_with('@')) {
        return std::string(text);
    }
    for (const auto& a : kAliases) {
        if (a.name == text) {
            return std::string(a.text);
        }
    }
    fail(ErrorCode::Parse, "unknown identity alias '" + std::string(text) + "'");
}

Json run_check(const CheckRequest& request)
{
    const auto parsed = parse_identity(expand_alias(request.identity), ParseOptions{request.digit_exponents});
    const std::string name = lower(request.monoid);
    const bool word_model = name == "m" || name == "n";
    Json out{{"identity", format_identity(parsed)}, {"monoid", request.monoid}, {"seed", request.seed}};

    const bool criterion = request.mode == CheckMode::Criterion || (request.mode == CheckMode::Auto && word_model);
    if (criterion) {
        require(word_model, ErrorCode::UnknownMonoid, "a decision criterion exists only for M and N");
        const Word u = letters_of(parsed.identity.lhs);
        const Word v = letters_of(parsed.identity.rhs);
        const bool holds = name == "m" ? holds_in_M(u, v) : holds_in_N(u, v);
        out["status"] = holds ? "holds" : "fails";
        out["evidence"] = "criterion";
        out["witness"] = nullptr;
        out["tried"] = 0;
        out["note"] = holds ? "all sections agree" : "some section differs";
        return out;
    }

    CheckOptions options;
    options.budget = request.budget;
    options.seed = request.seed;
    const auto s = run_search(parsed.identity, request.monoid, options);
    out["status"] = status_name(s.verdict.status);
    out["evidence"] = evidence_json(s.verdict.evidence);
    if (s.witness.empty()) {
        out["witness"] = nullptr;
    } else {
        Json w = Json::object();
        for (std::size_t i = 0; i < s.witness.size(); ++i) {
            w[parsed.alphabet.name(static_cast<Letter>(i + 1))] = s.witness[i];
        }
        out["witness"] = std::move(w);
    }
    out["tried"] = s.verdict.tried;
    out["note"] = s.verdict.note;
    return out;
}

Json normal_form_report(std::string_view word, bool canonical, bool digit_exponents)
{
    const auto parsed = parse_word(word, ParseOptions{digit_exponents});
    const Word w = letters_of(parsed.word);
    const Word form = canonical ? canonical_form(w) : normal_form(w);
    const auto rep = extreme_rep(form);
    Json blocks = Json::array();
    for (const auto& b : rep.blocks) {
        blocks.push_back(format_powers(b, parsed.alphabet));
    }
    return {{"word", format_word(w, parsed.alphabet)},
            {"form", format_word(form, parsed.alphabet)},
            {"kind", canonical ? "canonical" : "normal"},
            {"extremes", format_word(rep.extremes, parsed.alphabet)},
            {"blocks", std::move(blocks)}};
}

Json idempotents_report(int n, Category category)
{
    require(n >= 0, ErrorCode::Range, "n must be nonnegative");
    std::vector<Partition> candidates;
    if (category == Category::P) {
        require(n <= 5, ErrorCode::BoundExceeded, "square partitions are listed up to n = 5");
        candidates = enumerate_partitions(n, n);
    } else if (category == Category::Ann) {
        require(n >= 1 && n <= kAnnBound, ErrorCode::BoundExceeded, "annular monoids are tabulated for 1 <= n <= 6");
        candidates = shared_ann_monoid(n).elements;
    } else {
        fail(ErrorCode::UnknownCategory, "idempotents are listed for P and Ann");
    }
    Json list = Json::array();
    for (const auto& p : candidates) {
        const auto parts = idempotent_decomposition(p);
        if (!parts) {
            continue;
        }
        Json components = Json::array();
        for (const auto& c : *parts) {
            components.push_back({{"points", c.points}, {"rank", c.rank}});
        }
        list.push_back({{"value", to_json(p)}, {"components", std::move(components)}});
    }
    return {{"category", category_name(category)},
            {"n", n},
            {"searched", candidates.size()},
            {"count", list.size()},
            {"idempotents", std::move(list)}};
}

} // namespace diagmon
