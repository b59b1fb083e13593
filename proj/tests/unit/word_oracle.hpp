// Direct transcriptions of the section criteria, used only by tests.
#pragma once

#include "diagmon/words.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using diagmon::Letter;
using diagmon::Word;

inline std::map<Letter, int> counts(const Word& w)
{
    std::map<Letter, int> c;
    for (Letter x : w) ++c[x];
    return c;
}

inline bool same_counts(const Word& a, const Word& b) { return counts(a) == counts(b); }

inline bool same_counts_mod2(const Word& a, const Word& b)
{
    auto ca = counts(a);
    auto cb = counts(b);
    if (ca.size() != cb.size()) return false;
    for (const auto& [x, n] : ca) {
        auto it = cb.find(x);
        if (it == cb.end() || (n - it->second) % 2 != 0) return false;
    }
    return true;
}

inline Word prefix_before(const Word& w, Letter x)
{
    return Word(w.begin(), std::find(w.begin(), w.end(), x));
}

inline Word suffix_after(const Word& w, Letter x)
{
    Word r(w.rbegin(), std::find(w.rbegin(), w.rend(), x));
    std::reverse(r.begin(), r.end());
    return r;
}

inline bool sections_ok(const Word& u, const Word& v, const std::function<bool(const Word&, const Word&)>& ok)
{
    if (!ok(u, v)) return false;
    for (Letter x = 1; x <= 8; ++x) {
        if (!ok(prefix_before(u, x), prefix_before(v, x))) return false;
        if (!ok(suffix_after(u, x), suffix_after(v, x))) return false;
    }
    return true;
}

inline bool in_M(const Word& u, const Word& v) { return sections_ok(u, v, same_counts); }

inline bool in_N(const Word& u, const Word& v)
{
    return same_counts(u, v) && sections_ok(u, v, same_counts_mod2);
}

// All words of length 1..max_len over letters 1..k.
inline std::vector<Word> all_words(int k, int max_len)
{
    std::vector<Word> out;
    std::vector<Word> layer{Word{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const auto& w : layer) {
            for (Letter x = 1; x <= k; ++x) {
                Word v = w;
                v.push_back(x);
                next.push_back(v);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

// Words grouped by letter multiset; each group in lexicographic order.
inline std::vector<std::vector<Word>> multiset_classes(int k, int max_len)
{
    std::map<Word, std::vector<Word>> groups;
    for (const auto& w : all_words(k, max_len)) {
        Word key = w;
        std::sort(key.begin(), key.end());
        groups[key].push_back(w);
    }
    std::vector<std::vector<Word>> out;
    for (auto& [_, g] : groups) {
        std::sort(g.begin(), g.end());
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace oracle
