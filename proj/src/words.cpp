#include "diagmon/words.hpp"

#include "diagmon/error.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <set>
#include <tuple>

namespace diagmon {

IWord plain(const Word& w)
{
    IWord out;
    out.reserve(w.size());
    for (Letter x : w) {
        out.push_back({x, false});
    }
    return out;
}

bool is_plain(const IWord& w)
{
    return std::none_of(w.begin(), w.end(), [](const Symbol& s) { return s.starred; });
}

Word letters_of(const IWord& w)
{
    require(is_plain(w), ErrorCode::NoInvolution, "word contains starred letters");
    Word out;
    out.reserve(w.size());
    for (const auto& s : w) {
        out.push_back(s.letter);
    }
    return out;
}

Alphabet::Alphabet(std::vector<std::string> names)
    : names_(std::move(names))
{
}

Alphabet Alphabet::indexed(std::size_t count, char head)
{
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= count; ++i) {
        names.push_back(head + std::to_string(i));
    }
    return Alphabet(std::move(names));
}

std::string Alphabet::name(Letter x) const
{
    if (x >= 1 && static_cast<std::size_t>(x) <= names_.size()) {
        return names_[static_cast<std::size_t>(x - 1)];
    }
    return "x" + std::to_string(x);
}

Letter Identity::letter_count() const noexcept
{
    Letter k = 0;
    for (const auto* side : {&lhs, &rhs}) {
        for (const auto& s : *side) {
            k = std::max(k, s.letter);
        }
    }
    return k;
}

namespace {

struct RawSymbol {
    std::string name;
    bool starred = false;
};

std::tuple<char, long long, std::string> name_key(const std::string& name)
{
    const std::string suffix = name.substr(1);
    const long long number = suffix.empty() ? -1 : std::stoll(suffix);
    return {name.front(), number, suffix};
}

std::vector<RawSymbol> tokenize(std::string_view text, const ParseOptions& options)
{
    std::vector<RawSymbol> out;
    std::size_t i = 0;
    auto digits = [&]() {
        const std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
        return std::string(text.substr(start, i - start));
    };
    bool saw_one = false;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == '.') {
            ++i;
            continue;
        }
        if (static_cast<unsigned char>(c) == 0xC2 && i + 1 < text.size() &&
            static_cast<unsigned char>(text[i + 1]) == 0xB7) { // middle dot
            i += 2;
            continue;
        }
        if (c == '1' && (i + 1 == text.size() || !std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
            saw_one = true; // the empty word
            ++i;
            continue;
        }
        require(c >= 'a' && c <= 'z', ErrorCode::Parse,
                "unexpected character '" + std::string(1, c) + "' at position " + std::to_string(i));
        ++i;
        RawSymbol sym{std::string(1, c), false};
        std::string tail = digits();
        std::size_t repeat = 1;
        if (!tail.empty()) {
            if (options.digit_exponents) {
                repeat = std::stoul(tail);
            } else {
                require(tail.size() == 1 || tail.front() != '0', ErrorCode::Parse,
                        "letter index with a leading zero");
                sym.name += tail;
            }
        }
        if (i < text.size() && text[i] == '*') {
            sym.starred = true;
            ++i;
        }
        if (i < text.size() && text[i] == '^') {
            ++i;
            const std::string e = digits();
            require(!e.empty(), ErrorCode::Parse, "missing exponent after '^'");
            repeat *= std::stoul(e);
        }
        require(repeat <= 100000, ErrorCode::Parse, "exponent too large");
        for (std::size_t r = 0; r < repeat; ++r) {
            out.push_back(sym);
        }
    }
    require(!out.empty() || saw_one, ErrorCode::Parse, "empty word; write 1 for the empty word");
    require(out.empty() || !saw_one, ErrorCode::Parse, "1 may only stand alone");
    return out;
}

Alphabet alphabet_of(const std::vector<const std::vector<RawSymbol>*>& sides)
{
    std::set<std::string> names;
    for (const auto* side : sides) {
        for (const auto& s : *side) {
            names.insert(s.name);
        }
    }
    std::vector<std::string> sorted(names.begin(), names.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const std::string& a, const std::string& b) { return name_key(a) < name_key(b); });
    return Alphabet(std::move(sorted));
}

IWord lower(const std::vector<RawSymbol>& raw, const Alphabet& alphabet)
{
    IWord out;
    for (const auto& s : raw) {
        const auto& names = alphabet.names();
        const auto it = std::find(names.begin(), names.end(), s.name);
        out.push_back({static_cast<Letter>(it - names.begin() + 1), s.starred});
    }
    return out;
}

} // namespace

ParsedWord parse_word(std::string_view text, const ParseOptions& options)
{
    const auto raw = tokenize(text, options);
    Alphabet alphabet = alphabet_of({&raw});
    return {lower(raw, alphabet), alphabet};
}

ParsedIdentity parse_identity(std::string_view text, const ParseOptions& options)
{
    std::size_t split = text.find('=');
    std::size_t width = 1;
    if (split == std::string_view::npos) {
        split = text.find("\xE2\x89\x83"); // asymptotically-equal sign
        width = 3;
    }
    require(split != std::string_view::npos, ErrorCode::Parse, "identity needs '=' between its sides");
    const auto left = tokenize(text.substr(0, split), options);
    const auto right = tokenize(text.substr(split + width), options);
    Alphabet alphabet = alphabet_of({&left, &right});
    return {{lower(left, alphabet), lower(right, alphabet)}, alphabet};
}

std::string format_word(const Word& w, const Alphabet& alphabet)
{
    return format_word(plain(w), alphabet);
}

std::string format_word(const IWord& w, const Alphabet& alphabet)
{
    if (w.empty()) {
        return "1";
    }
    std::string out;
    for (const auto& s : w) {
        out += alphabet.name(s.letter);
        if (s.starred) {
            out += "*";
        }
    }
    return out;
}

std::string format_powers(const Word& w, const Alphabet& alphabet)
{
    if (w.empty()) {
        return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) {
            ++j;
        }
        out += alphabet.name(w[i]);
        if (j - i > 1) {
            out += "^" + std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

Word zimin(int k)
{
    require(k >= 1, ErrorCode::Range, "Zimin words start at index 1");
    Word z{1};
    for (Letter x = 2; x <= k; ++x) {
        Word next = z;
        next.push_back(x);
        next.insert(next.end(), z.begin(), z.end());
        z = std::move(next);
    }
    return z;
}

Word substitute(const Word& pattern, const std::vector<Word>& images)
{
    Word out;
    for (Letter x : pattern) {
        require(x >= 1 && static_cast<std::size_t>(x) <= images.size(), ErrorCode::MissingLetter,
                "no image for letter " + std::to_string(x));
        const Word& image = images[static_cast<std::size_t>(x - 1)];
        out.insert(out.end(), image.begin(), image.end());
    }
    return out;
}

std::size_t occ(const Word& w, Letter x)
{
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), x));
}

std::vector<Letter> content(const Word& w)
{
    std::vector<Letter> out(w.begin(), w.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

std::map<Letter, std::size_t> counts(const Word& w)
{
    std::map<Letter, std::size_t> out;
    for (Letter x : w) {
        ++out[x];
    }
    return out;
}

} // namespace

bool is_balanced(const Word& u, const Word& v)
{
    return counts(u) == counts(v);
}

bool is_balanced_mod2(const Word& u, const Word& v)
{
    const auto cu = counts(u);
    const auto cv = counts(v);
    if (cu.size() != cv.size()) {
        return false;
    }
    for (auto a = cu.begin(), b = cv.begin(); a != cu.end(); ++a, ++b) {
        if (a->first != b->first || a->second % 2 != b->second % 2) {
            return false;
        }
    }
    return true;
}

std::map<std::pair<Letter, Letter>, std::size_t> factor2_counts(const Word& w)
{
    std::map<std::pair<Letter, Letter>, std::size_t> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        ++out[{w[i], w[i + 1]}];
    }
    return out;
}

Word left_section(const Word& w, Letter x)
{
    return Word(w.begin(), std::find(w.begin(), w.end(), x));
}

Word right_section(Letter x, const Word& w)
{
    const auto it = std::find(w.rbegin(), w.rend(), x);
    return Word(it.base(), w.end());
}

Word ExtremeRep::word() const
{
    Word out;
    for (std::size_t i = 0; i < extremes.size(); ++i) {
        if (i > 0) {
            out.insert(out.end(), blocks[i - 1].begin(), blocks[i - 1].end());
        }
        out.push_back(extremes[i]);
    }
    return out;
}

ExtremeRep extreme_rep(const Word& w)
{
    require(!w.empty(), ErrorCode::EmptyWord, "the empty word has no extreme representation");
    std::map<Letter, std::pair<std::size_t, std::size_t>> span;
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto [it, inserted] = span.emplace(w[i], std::pair{i, i});
        if (!inserted) {
            it->second.second = i;
        }
    }
    std::vector<std::size_t> positions;
    for (const auto& [x, s] : span) {
        positions.push_back(s.first);
        positions.push_back(s.second);
    }
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());

    ExtremeRep rep;
    for (std::size_t k = 0; k < positions.size(); ++k) {
        rep.extremes.push_back(w[positions[k]]);
        if (k > 0) {
            rep.blocks.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(positions[k - 1] + 1),
                                    w.begin() + static_cast<std::ptrdiff_t>(positions[k]));
        }
    }
    return rep;
}

Word normal_form(const Word& w)
{
    auto rep = extreme_rep(w);
    for (auto& b : rep.blocks) {
        std::sort(b.begin(), b.end());
    }
    return rep.word();
}

Word canonical_form(const Word& w)
{
    require(!w.empty(), ErrorCode::EmptyWord, "the empty word has no canonical form");
    const auto letters = content(w);
    const std::size_t k = letters.size();
    auto slot = [&](Letter x) {
        return static_cast<std::size_t>(std::lower_bound(letters.begin(), letters.end(), x) - letters.begin());
    };
    std::vector<std::size_t> total(k, 0);
    for (Letter x : w) {
        ++total[slot(x)];
    }
    // Occurrence counts of every letter in each left and right section.
    std::vector<std::vector<std::size_t>> left(k, std::vector<std::size_t>(k, 0));
    std::vector<std::vector<std::size_t>> right(k, std::vector<std::size_t>(k, 0));
    for (std::size_t a = 0; a < k; ++a) {
        for (Letter y : left_section(w, letters[a])) {
            ++left[a][slot(y)];
        }
        for (Letter y : right_section(letters[a], w)) {
            ++right[a][slot(y)];
        }
    }

    std::vector<std::uint64_t> radix(k);
    std::uint64_t states = 1;
    for (std::size_t a = 0; a < k; ++a) {
        radix[a] = states;
        states *= total[a] + 1;
        require(states <= 50'000'000, ErrorCode::BoundExceeded, "word too long for the canonical form");
    }

    auto agrees = [](std::size_t have, std::size_t want) {
        return (have > 0) == (want > 0) && have % 2 == want % 2;
    };
    // May letter a be placed next, given counts used so far?
    auto allowed = [&](const std::vector<std::size_t>& used, std::size_t a) {
        if (used[a] == total[a]) {
            return false;
        }
        if (used[a] == 0) {
            for (std::size_t b = 0; b < k; ++b) {
                if (!agrees(used[b], left[a][b])) {
                    return false;
                }
            }
        }
        if (used[a] + 1 == total[a]) {
            for (std::size_t b = 0; b < k; ++b) {
                const std::size_t rest = total[b] - used[b] - (b == a ? 1 : 0);
                if (!agrees(rest, right[a][b])) {
                    return false;
                }
            }
        }
        return true;
    };

    std::vector<std::int8_t> memo(states, -1);
    std::vector<std::size_t> used(k, 0);
    std::uint64_t code = 0;
    const std::size_t length = w.size();
    auto feasible = [&](auto& self, std::size_t placed) -> bool {
        if (placed == length) {
            return true;
        }
        auto& m = memo[code];
        if (m >= 0) {
            return m == 1;
        }
        bool ok = false;
        for (std::size_t a = 0; a < k && !ok; ++a) {
            if (allowed(used, a)) {
                ++used[a];
                code += radix[a];
                ok = self(self, placed + 1);
                code -= radix[a];
                --used[a];
            }
        }
        memo[code] = ok ? 1 : 0;
        return ok;
    };

    Word out;
    for (std::size_t placed = 0; placed < length; ++placed) {
        bool moved = false;
        for (std::size_t a = 0; a < k && !moved; ++a) {
            if (!allowed(used, a)) {
                continue;
            }
            ++used[a];
            code += radix[a];
            if (feasible(feasible, placed + 1)) {
                out.push_back(letters[a]);
                moved = true;
            } else {
                code -= radix[a];
                --used[a];
            }
        }
        require(moved, ErrorCode::Internal, "canonical form search lost its own word");
    }
    return out;
}

} // namespace diagmon
