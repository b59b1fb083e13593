// Words over indexed letters: parsing, sections and normal forms.
#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace diagmon {

using Letter = int; // 1-based
using Word = std::vector<Letter>;

struct Symbol {
    Letter letter = 1;
    bool starred = false;

    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

using IWord = std::vector<Symbol>;

IWord plain(const Word& w);
bool is_plain(const IWord& w);
Word letters_of(const IWord& w); // throws NoInvolution on starred symbols

// Letter names in index order. Names sort by their alphabetic head, then by
// the numeric suffix, so t < x < y and x2 < x10.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);
    static Alphabet indexed(std::size_t count, char head = 'x');

    const std::vector<std::string>& names() const noexcept { return names_; }
    std::size_t size() const noexcept { return names_.size(); }
    std::string name(Letter x) const;

private:
    std::vector<std::string> names_;
};

struct Identity {
    IWord lhs;
    IWord rhs;

    bool involutory() const noexcept { return !is_plain(lhs) || !is_plain(rhs); }
    Letter letter_count() const noexcept;
};

struct ParseOptions {
    // Read digits after a letter as an exponent (x3 = xxx) instead of an index.
    bool digit_exponents = false;
};

struct ParsedWord {
    IWord word;
    Alphabet alphabet;
};

struct ParsedIdentity {
    Identity identity;
    Alphabet alphabet;
};

ParsedWord parse_word(std::string_view text, const ParseOptions& options = {});
ParsedIdentity parse_identity(std::string_view text, const ParseOptions& options = {});

std::string format_word(const Word& w, const Alphabet& alphabet);
std::string format_word(const IWord& w, const Alphabet& alphabet);
// Runs of a letter written with exponents, e.g. x^2yz^3; the empty word is "1".
std::string format_powers(const Word& w, const Alphabet& alphabet);

Word zimin(int k);
Word substitute(const Word& pattern, const std::vector<Word>& images);

std::size_t occ(const Word& w, Letter x);
std::vector<Letter> content(const Word& w);
bool is_balanced(const Word& u, const Word& v);
bool is_balanced_mod2(const Word& u, const Word& v);
std::map<std::pair<Letter, Letter>, std::size_t> factor2_counts(const Word& w);

// Longest prefix without x, longest suffix without x.
Word left_section(const Word& w, Letter x);
Word right_section(Letter x, const Word& w);

// w = z_0 u_1 z_1 ... u_n z_n with z_i the extreme (first or last) occurrences.
struct ExtremeRep {
    Word extremes;
    std::vector<Word> blocks; // interior blocks u_1..u_n
    Word word() const;
};

ExtremeRep extreme_rep(const Word& w);

// Interior blocks sorted by letter index.
Word normal_form(const Word& w);
// Least word (lexicographically) among those equivalent to w under the
// balanced-mod-2 relation on all sections.
Word canonical_form(const Word& w);

} // namespace diagmon
