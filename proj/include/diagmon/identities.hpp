// Deciding and testing identities: section criteria, sorting rewrites and
// substitution search in concrete monoids.
#pragma once

#include "diagmon/error.hpp"
#include "diagmon/words.hpp"

#include <concepts>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace diagmon {

// u = v holds in the ideal extension of Z x Z by Z: all sections balanced.
bool holds_in_M(const Word& u, const Word& v);
// u = v holds in the ideal extension of [2] x [2] by Z: balanced, and all
// sections balanced modulo 2.
bool holds_in_N(const Word& u, const Word& v);

// The two block-swapping identities, with x = 1, y = 2, t1..t4 = 3..6:
//   Nested:      x t1 y t2 (xy) t3 y t4 x  =  x t1 y t2 (yx) t3 y t4 x
//   Interleaved: x t1 y t2 (xy) t3 x t4 y  =  x t1 y t2 (yx) t3 x t4 y
enum class SwapIdentity { Nested, Interleaved };
enum class Direction { LeftToRight, RightToLeft };

Identity swap_identity(SwapIdentity which);
std::string to_string(SwapIdentity which);
std::string to_string(Direction d);

struct SortStep {
    Word result;
    SwapIdentity identity = SwapIdentity::Nested;
    Direction direction = Direction::LeftToRight;
    int case_number = 0;
    std::vector<Word> substitution; // images of x, y, t1, t2, t3, t4
    std::size_t factor_begin = 0;   // the rewritten factor is w[factor_begin, factor_end)
    std::size_t factor_end = 0;
};

// Swap the adjacent descending pair w[i] w[i+1] inside an interior block.
SortStep sort_step(const Word& w, std::size_t i);
// Sort every interior block by repeated swaps; the result is the normal form.
Word sort_blocks(const Word& w, std::size_t* steps = nullptr);

// Every identity obtained by deleting a subset of the given letters.
std::vector<Identity> expand_deletions(const Identity& identity, const std::vector<Letter>& deletable);

// Evaluation ---------------------------------------------------------------

template <class M>
concept Semigroup = requires(const M& m, const typename M::value_type& a) {
    { m.mul(a, a) } -> std::convertible_to<typename M::value_type>;
};

template <class M>
concept Monoid = Semigroup<M> && requires(const M& m) {
    { m.one() } -> std::convertible_to<typename M::value_type>;
};

template <class M>
concept InvolutiveSemigroup = Semigroup<M> && requires(const M& m, const typename M::value_type& a) {
    { m.star(a) } -> std::convertible_to<typename M::value_type>;
};

template <Semigroup M>
typename M::value_type evaluate(const IWord& w, std::span<const typename M::value_type> values, const M& m)
{
    using T = typename M::value_type;
    auto image = [&](const Symbol& s) -> T {
        require(s.letter >= 1 && static_cast<std::size_t>(s.letter) <= values.size(), ErrorCode::MissingLetter,
                "no value for letter " + std::to_string(s.letter));
        const T& v = values[static_cast<std::size_t>(s.letter - 1)];
        if (!s.starred) {
            return v;
        }
        if constexpr (InvolutiveSemigroup<M>) {
            return m.star(v);
        } else {
            fail(ErrorCode::NoInvolution, "monoid has no involution");
        }
    };
    if (w.empty()) {
        if constexpr (Monoid<M>) {
            return m.one();
        } else {
            fail(ErrorCode::EmptyWord, "empty word in a semigroup");
        }
    }
    T acc = image(w.front());
    for (std::size_t i = 1; i < w.size(); ++i) {
        acc = m.mul(acc, image(w[i]));
    }
    return acc;
}

struct Verdict {
    enum class Status { Holds, Fails, Unknown };
    enum class Evidence { None, Exhausted, Criterion };

    Status status = Status::Unknown;
    Evidence evidence = Evidence::None;
    std::vector<std::size_t> witness; // pool index per letter, when it fails
    std::uint64_t tried = 0;
    std::string note;
};

std::string to_string(Verdict::Status s);

struct CheckOptions {
    std::uint64_t budget = 1'000'000;
    std::uint64_t seed = 0;
    // The pool is the whole monoid, so an exhausted search proves the identity.
    bool pool_is_complete = false;
};

// Substitution search over a pool of values: exhaustive when |pool|^k fits
// the budget, otherwise `budget` seeded random substitutions.
template <Semigroup M>
Verdict check_identity(const Identity& identity, const M& m, std::span<const typename M::value_type> pool,
                       const CheckOptions& options = {})
{
    using T = typename M::value_type;
    require(!pool.empty(), ErrorCode::Range, "empty substitution pool");
    const auto k = static_cast<std::size_t>(identity.letter_count());
    std::vector<std::size_t> choice(k, 0);
    std::vector<T> values(k, pool.front());

    Verdict v;
    auto test = [&]() {
        for (std::size_t i = 0; i < k; ++i) {
            values[i] = pool[choice[i]];
        }
        ++v.tried;
        const std::span<const T> view(values);
        if (!(evaluate(identity.lhs, view, m) == evaluate(identity.rhs, view, m))) {
            v.status = Verdict::Status::Fails;
            v.witness = choice;
            return false;
        }
        return true;
    };

    // |pool|^k, saturating at budget + 1.
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k && total <= options.budget; ++i) {
        total *= pool.size();
    }
    if (total <= options.budget) {
        while (true) {
            if (!test()) {
                return v;
            }
            std::size_t i = 0;
            while (i < k && ++choice[i] == pool.size()) {
                choice[i++] = 0;
            }
            if (i == k) {
                break;
            }
        }
        if (options.pool_is_complete) {
            v.status = Verdict::Status::Holds;
            v.evidence = Verdict::Evidence::Exhausted;
        } else {
            v.note = "pool exhausted without a witness";
        }
        return v;
    }
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (std::uint64_t n = 0; n < options.budget; ++n) {
        for (auto& c : choice) {
            c = pick(rng);
        }
        if (!test()) {
            return v;
        }
    }
    v.note = "budget spent without a witness";
    return v;
}

} // namespace diagmon
