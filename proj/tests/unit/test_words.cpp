#include "word_oracle.hpp"

#include "diagmon/error.hpp"
#include "diagmon/identities.hpp"
#include "diagmon/words.hpp"

#include <doctest.h>

#include <random>

using namespace diagmon;

namespace {

Word w_of(std::string_view text, ParseOptions options = {})
{
    return letters_of(parse_word(text, options).word);
}

int code_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return static_cast<int>(e.code());
    }
    return -1;
}

Word random_word(std::mt19937& rng, int letters, int max_len)
{
    const int len = std::uniform_int_distribution<int>(1, max_len)(rng);
    std::uniform_int_distribution<int> d(1, letters);
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(d(rng));
    return w;
}

} // namespace

TEST_CASE("parsing words and identities")
{
    const auto p = parse_word("x^3yxytz^4xyz");
    CHECK(p.alphabet.names() == std::vector<std::string>{"t", "x", "y", "z"});
    CHECK(letters_of(p.word) == Word{2, 2, 2, 3, 2, 3, 1, 4, 4, 4, 4, 2, 3, 4});
    CHECK(w_of("x3yxytz4xyz", {.digit_exponents = true}) == letters_of(p.word));

    const auto idx = parse_word("x1 x10 x2");
    CHECK(idx.alphabet.names() == std::vector<std::string>{"x1", "x2", "x10"});
    CHECK(letters_of(idx.word) == Word{1, 3, 2});

    const auto star = parse_word("xy*x");
    CHECK(star.word[1].starred);
    CHECK(code_of([&] { letters_of(star.word); }) == static_cast<int>(ErrorCode::NoInvolution));

    CHECK(parse_word("1").word.empty());
    CHECK(code_of([] { parse_word(""); }) == static_cast<int>(ErrorCode::Parse));
    CHECK(code_of([] { parse_word("x+y"); }) == static_cast<int>(ErrorCode::Parse));
    CHECK(code_of([] { parse_word("x^"); }) == static_cast<int>(ErrorCode::Parse));
    CHECK(code_of([] { parse_identity("xy"); }) == static_cast<int>(ErrorCode::Parse));

    const auto id = parse_identity("x^3yx \xE2\x89\x83 xyx^3");
    CHECK(id.identity.lhs.size() == 5);
    CHECK(id.identity.letter_count() == 2);
    const auto dots = parse_identity("x t1 y \xC2\xB7 xy = x.t1.y.yx");
    CHECK(dots.alphabet.names() == std::vector<std::string>{"t1", "x", "y"});

    CHECK(format_powers(letters_of(p.word), p.alphabet) == "x^3yxytz^4xyz");
    CHECK(format_word(star.word, star.alphabet) == "xy*x");
    CHECK(format_powers({}, p.alphabet) == "1");
}

TEST_CASE("zimin words and letter statistics")
{
    CHECK(zimin(1) == Word{1});
    CHECK(zimin(2) == Word{1, 2, 1});
    CHECK(zimin(3) == Word{1, 2, 1, 3, 1, 2, 1});
    for (int k = 1; k <= 8; ++k) CHECK(zimin(k).size() == (std::size_t{1} << k) - 1);

    const Word other{1, 3, 1, 2, 1, 2, 1};
    CHECK(zimin(3).front() == other.front());
    CHECK(zimin(3).back() == other.back());
    CHECK(factor2_counts(zimin(3)) == factor2_counts(other));
    const std::map<std::pair<Letter, Letter>, std::size_t> z3{{{1, 2}, 2}, {{2, 1}, 2}, {{1, 3}, 1}, {{3, 1}, 1}};
    CHECK(factor2_counts(zimin(3)) == z3);

    CHECK(is_balanced({1, 2}, {2, 1}));
    CHECK_FALSE(is_balanced({1}, {1, 1}));
    CHECK(is_balanced_mod2(w_of("x^3yx"), w_of("xyx^3")));
    CHECK(occ(zimin(4), 1) == 8);
    CHECK(content(w_of("zyzx")) == std::vector<Letter>{1, 2, 3});
    CHECK(substitute({1, 2, 1}, {{3}, {4, 4}}) == Word{3, 4, 4, 3});
    CHECK(code_of([] { substitute({1, 2}, {{1}}); }) == static_cast<int>(ErrorCode::MissingLetter));
}

TEST_CASE("sections")
{
    const auto p = parse_word("x^3yxytz^4xyz");
    const Word w = letters_of(p.word);
    CHECK(left_section(w_of("xy"), 1).empty());
    CHECK(format_powers(left_section(w, 1), p.alphabet) == "x^3yxy");
    CHECK(right_section(4, w).empty());
    CHECK(left_section(w, 9) == w);
    CHECK(right_section(9, w) == w);
}

TEST_CASE("extreme representation of the worked example")
{
    const auto p = parse_word("x^3yxytz^4xyz");
    const auto rep = extreme_rep(letters_of(p.word));
    CHECK(format_word(rep.extremes, p.alphabet) == "xytzxyz");
    std::vector<std::string> blocks;
    for (const auto& b : rep.blocks) blocks.push_back(format_powers(b, p.alphabet));
    CHECK(blocks == std::vector<std::string>{"x^2", "xy", "1", "z^3", "1", "1"});
    CHECK(rep.word() == letters_of(p.word));
    CHECK(normal_form(letters_of(p.word)) == letters_of(p.word));

    CHECK(extreme_rep({1}).extremes == Word{1});
    CHECK(extreme_rep({1}).blocks.empty());
    const auto xyx = extreme_rep({1, 2, 1});
    CHECK(xyx.extremes == Word{1, 2, 1});
    CHECK(xyx.blocks == std::vector<Word>{{}, {}});
    CHECK(code_of([] { extreme_rep({}); }) == static_cast<int>(ErrorCode::EmptyWord));
}

TEST_CASE("extreme representation invariants")
{
    std::mt19937 rng(1);
    for (int trial = 0; trial < 5000; ++trial) {
        const Word w = random_word(rng, 4, 12);
        const auto rep = extreme_rep(w);
        const auto k = content(w).size();
        CHECK(rep.blocks.size() + 1 == rep.extremes.size());
        CHECK(rep.word() == w);
        CHECK(rep.extremes.size() >= k);
        CHECK(rep.extremes.size() <= 2 * k);
    }
}

TEST_CASE("normal form is the least word of its class under the section criterion")
{
    for (const auto& group : oracle::multiset_classes(3, 7)) {
        for (const auto& w : group) {
            Word least = w;
            for (const auto& v : group) {
                if (oracle::in_M(w, v)) {
                    least = v;
                    break;
                }
            }
            REQUIRE(normal_form(w) == least);
        }
    }
}

TEST_CASE("canonical form is the least word of its class under the mod-2 criterion")
{
    for (const auto& group : oracle::multiset_classes(3, 7)) {
        for (const auto& w : group) {
            Word least = w;
            for (const auto& v : group) {
                if (oracle::in_N(w, v)) {
                    least = v;
                    break;
                }
            }
            REQUIRE(canonical_form(w) == least);
        }
    }
    CHECK(canonical_form(w_of("x^3yx")) == canonical_form(w_of("xyx^3")));
}

TEST_CASE("forms are idempotent and respect their classes")
{
    std::mt19937 rng(2);
    for (int trial = 0; trial < 10000; ++trial) {
        const Word w = random_word(rng, 4, 14);
        const Word nf = normal_form(w);
        CHECK(normal_form(nf) == nf);
        CHECK(oracle::in_M(w, nf));
        const Word cf = canonical_form(w);
        CHECK(canonical_form(cf) == cf);
        CHECK(oracle::in_N(w, cf));
        CHECK(cf <= nf);
    }
}

TEST_CASE("square-free words can have canonical forms below their normal forms")
{
    const auto p = parse_word("xyzxzyxyz");
    const Word w = letters_of(p.word);
    CHECK(format_word(normal_form(w), p.alphabet) == "xyzxyzxyz");
    CHECK(format_word(canonical_form(w), p.alphabet) == "xxxyyyzzz");
    CHECK(oracle::in_N(normal_form(w), canonical_form(w)));
    CHECK_FALSE(oracle::in_M(normal_form(w), canonical_form(w)));
    // Below length 9 the two forms agree on square-free words.
    for (const auto& v : oracle::all_words(3, 8)) {
        bool square = false;
        for (std::size_t i = 0; i < v.size() && !square; ++i) {
            for (std::size_t len = 1; i + 2 * len <= v.size() && !square; ++len) {
                square = std::equal(v.begin() + static_cast<std::ptrdiff_t>(i),
                                    v.begin() + static_cast<std::ptrdiff_t>(i + len),
                                    v.begin() + static_cast<std::ptrdiff_t>(i + len));
            }
        }
        if (!square) CHECK(canonical_form(v) == normal_form(v));
    }
}

TEST_CASE("empty words")
{
    CHECK(code_of([] { normal_form({}); }) == static_cast<int>(ErrorCode::EmptyWord));
    CHECK(code_of([] { canonical_form({}); }) == static_cast<int>(ErrorCode::EmptyWord));
}
