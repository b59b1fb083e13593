#include "diagmon/identities.hpp"

#include <algorithm>

namespace diagmon {

namespace {

template <class Agree>
bool sections_agree(const Word& u, const Word& v, Agree agree)
{
    std::vector<Letter> letters = content(u);
    const auto cv = content(v);
    letters.insert(letters.end(), cv.begin(), cv.end());
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    if (!agree(u, v)) { // sections at an absent letter are the whole words
        return false;
    }
    for (Letter x : letters) {
        if (!agree(left_section(u, x), left_section(v, x)) || !agree(right_section(x, u), right_section(x, v))) {
            return false;
        }
    }
    return true;
}

} // namespace

bool holds_in_M(const Word& u, const Word& v)
{
    return sections_agree(u, v, [](const Word& a, const Word& b) { return is_balanced(a, b); });
}

bool holds_in_N(const Word& u, const Word& v)
{
    return is_balanced(u, v) &&
           sections_agree(u, v, [](const Word& a, const Word& b) { return is_balanced_mod2(a, b); });
}

Identity swap_identity(SwapIdentity which)
{
    constexpr Letter x = 1, y = 2, t1 = 3, t2 = 4, t3 = 5, t4 = 6;
    const Word tail = which == SwapIdentity::Nested ? Word{t3, y, t4, x} : Word{t3, x, t4, y};
    Word lhs{x, t1, y, t2, x, y};
    Word rhs{x, t1, y, t2, y, x};
    lhs.insert(lhs.end(), tail.begin(), tail.end());
    rhs.insert(rhs.end(), tail.begin(), tail.end());
    return {plain(lhs), plain(rhs)};
}

std::string to_string(SwapIdentity which)
{
    return which == SwapIdentity::Nested ? "nested-swap" : "interleaved-swap";
}

std::string to_string(Direction d)
{
    return d == Direction::LeftToRight ? "left-to-right" : "right-to-left";
}

SortStep sort_step(const Word& w, std::size_t i)
{
    require(i + 1 < w.size(), ErrorCode::NotInteriorFactor, "position out of range");
    const Letter big = w[i];
    const Letter small = w[i + 1];
    require(big > small, ErrorCode::NotInteriorFactor, "pair is not descending");
    auto first = [&](Letter x) {
        return static_cast<std::size_t>(std::find(w.begin(), w.end(), x) - w.begin());
    };
    auto last = [&](Letter x) {
        return static_cast<std::size_t>(w.rend() - std::find(w.rbegin(), w.rend(), x) - 1);
    };
    const std::size_t fs = first(small), ls = last(small), fb = first(big), lb = last(big);
    require(fb < i && i < lb && fs < i + 1 && i + 1 < ls, ErrorCode::NotInteriorFactor,
            "pair is not inside an interior block");

    SortStep step;
    // Four anchor positions around the pair, and who plays x and y.
    std::size_t p1, p2, p3, p4;
    Letter x, y;
    if (fs < fb) {
        p1 = fs;
        p2 = fb;
        x = small;
        y = big;
        step.direction = Direction::RightToLeft;
        if (ls < lb) {
            step.case_number = 1;
            step.identity = SwapIdentity::Interleaved;
            p3 = ls;
            p4 = lb;
        } else {
            step.case_number = 2;
            step.identity = SwapIdentity::Nested;
            p3 = lb;
            p4 = ls;
        }
    } else {
        p1 = fb;
        p2 = fs;
        x = big;
        y = small;
        step.direction = Direction::LeftToRight;
        if (ls < lb) {
            step.case_number = 3;
            step.identity = SwapIdentity::Nested;
            p3 = ls;
            p4 = lb;
        } else {
            step.case_number = 4;
            step.identity = SwapIdentity::Interleaved;
            p3 = lb;
            p4 = ls;
        }
    }
    auto slice = [&](std::size_t from, std::size_t to) {
        return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
    };
    step.substitution = {{x}, {y}, slice(p1 + 1, p2), slice(p2 + 1, i), slice(i + 2, p3), slice(p3 + 1, p4)};
    step.factor_begin = p1;
    step.factor_end = p4 + 1;

    // Rewrite through the identity instance, then check the source side matched.
    const Identity id = swap_identity(step.identity);
    const Word& from = step.direction == Direction::LeftToRight ? letters_of(id.lhs) : letters_of(id.rhs);
    const Word& to = step.direction == Direction::LeftToRight ? letters_of(id.rhs) : letters_of(id.lhs);
    require(substitute(from, step.substitution) == slice(p1, p4 + 1), ErrorCode::Internal,
            "swap identity does not match the factor");
    step.result = slice(0, p1);
    const Word image = substitute(to, step.substitution);
    step.result.insert(step.result.end(), image.begin(), image.end());
    step.result.insert(step.result.end(), w.begin() + static_cast<std::ptrdiff_t>(p4 + 1), w.end());
    return step;
}

Word sort_blocks(const Word& w, std::size_t* steps)
{
    Word cur = w;
    std::size_t count = 0;
    while (true) {
        std::vector<bool> extreme(cur.size(), false);
        for (Letter x : content(cur)) {
            extreme[static_cast<std::size_t>(std::find(cur.begin(), cur.end(), x) - cur.begin())] = true;
            extreme[static_cast<std::size_t>(cur.rend() - std::find(cur.rbegin(), cur.rend(), x) - 1)] = true;
        }
        std::size_t i = 0;
        while (i + 1 < cur.size() && !(cur[i] > cur[i + 1] && !extreme[i] && !extreme[i + 1])) {
            ++i;
        }
        if (i + 1 >= cur.size()) {
            break;
        }
        cur = sort_step(cur, i).result;
        ++count;
    }
    if (steps) {
        *steps = count;
    }
    return cur;
}

std::vector<Identity> expand_deletions(const Identity& identity, const std::vector<Letter>& deletable)
{
    require(deletable.size() < 20, ErrorCode::BoundExceeded, "too many deletable letters");
    std::vector<Identity> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << deletable.size()); ++mask) {
        auto keep = [&](const Symbol& s) {
            for (std::size_t b = 0; b < deletable.size(); ++b) {
                if ((mask >> b & 1u) && deletable[b] == s.letter) {
                    return false;
                }
            }
            return true;
        };
        Identity id;
        std::copy_if(identity.lhs.begin(), identity.lhs.end(), std::back_inserter(id.lhs), keep);
        std::copy_if(identity.rhs.begin(), identity.rhs.end(), std::back_inserter(id.rhs), keep);
        out.push_back(std::move(id));
    }
    return out;
}

std::string to_string(Verdict::Status s)
{
    switch (s) {
    case Verdict::Status::Holds: return "holds";
    case Verdict::Status::Fails: return "fails";
    case Verdict::Status::Unknown: return "unknown";
    }
    return "unknown";
}

} // namespace diagmon
