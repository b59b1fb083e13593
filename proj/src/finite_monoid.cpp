#include "diagmon/finite_monoid.hpp"

#include "diagmon/error.hpp"

#include <deque>
#include <map>
#include <string>

namespace diagmon {

FiniteMonoid::FiniteMonoid(std::size_t size, std::vector<Element> table,
                           std::optional<std::vector<Element>> involution,
                           std::span<const Element> generators)
    : size_(size)
    , table_(std::move(table))
{
    require(table_.size() == size_ * size_, ErrorCode::NotClosed, "table has the wrong size");
    for (Element e : table_) {
        require(e < size_, ErrorCode::NotClosed, "table entry " + std::to_string(e) + " out of range");
    }

    if (size_ <= kFullCheckLimit) {
        for (Element a = 0; a < size_; ++a) {
            for (Element b = 0; b < size_; ++b) {
                const Element ab = mul(a, b);
                for (Element c = 0; c < size_; ++c) {
                    require(mul(ab, c) == mul(a, mul(b, c)), ErrorCode::NotAssociative,
                            "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                                ") is not associative");
                }
            }
        }
    } else {
        require(!generators.empty(), ErrorCode::NotAssociative,
                "large tables need generators for the associativity check");
        // The generators must generate, otherwise Light's test proves nothing.
        std::vector<bool> seen(size_, false);
        std::deque<Element> queue;
        for (Element g : generators) {
            require(g < size_, ErrorCode::NotClosed, "generator out of range");
            if (!seen[g]) {
                seen[g] = true;
                queue.push_back(g);
            }
        }
        std::size_t reached = queue.size();
        while (!queue.empty()) {
            const Element x = queue.front();
            queue.pop_front();
            for (Element g : generators) {
                const Element y = mul(x, g);
                if (!seen[y]) {
                    seen[y] = true;
                    ++reached;
                    queue.push_back(y);
                }
            }
        }
        require(reached == size_, ErrorCode::NotAssociative, "generators do not generate the table");
        for (Element g : generators) {
            for (Element a = 0; a < size_; ++a) {
                const Element ag = mul(a, g);
                for (Element b = 0; b < size_; ++b) {
                    require(mul(ag, b) == mul(a, mul(g, b)), ErrorCode::NotAssociative,
                            "Light's test fails at generator " + std::to_string(g));
                }
            }
        }
    }

    for (Element e = 0; e < size_ && !identity_; ++e) {
        bool ok = true;
        for (Element a = 0; a < size_ && ok; ++a) {
            ok = mul(e, a) == a && mul(a, e) == a;
        }
        if (ok) {
            identity_ = e;
        }
    }

    if (involution) {
        involution_ = std::move(*involution);
        require(involution_.size() == size_, ErrorCode::BadInvolution, "involution has the wrong size");
        for (Element a = 0; a < size_; ++a) {
            require(involution_[a] < size_ && involution_[involution_[a]] == a, ErrorCode::BadInvolution,
                    "involution is not of order two at " + std::to_string(a));
            for (Element b = 0; b < size_; ++b) {
                require(involution_[mul(a, b)] == mul(involution_[b], involution_[a]),
                        ErrorCode::BadInvolution,
                        "involution does not reverse products at (" + std::to_string(a) + "," +
                            std::to_string(b) + ")");
            }
        }
    }
}

FiniteMonoid::Element FiniteMonoid::star(Element a) const
{
    require(has_involution(), ErrorCode::NoInvolution, "monoid has no involution");
    return involution_[a];
}

std::vector<FiniteMonoid::Element> FiniteMonoid::idempotents() const
{
    std::vector<Element> out;
    for (Element a = 0; a < size_; ++a) {
        if (mul(a, a) == a) {
            out.push_back(a);
        }
    }
    return out;
}

FiniteMonoid::Element FiniteMonoid::power(Element x, std::uint64_t t) const
{
    require(t >= 1 || identity_, ErrorCode::Range, "zeroth power in a semigroup");
    Element result = t == 0 ? *identity_ : x;
    for (std::uint64_t i = 1; i < t; ++i) {
        result = mul(result, x);
    }
    return result;
}

std::pair<std::uint64_t, std::uint64_t> FiniteMonoid::index_period(Element x) const
{
    std::map<Element, std::uint64_t> first;
    Element p = x;
    for (std::uint64_t i = 1;; ++i) {
        auto [it, inserted] = first.emplace(p, i);
        if (!inserted) {
            return {it->second, i - it->second};
        }
        p = mul(p, x);
    }
}

FiniteMonoid::Element TableMonoid::one() const
{
    const auto e = table->identity();
    require(e.has_value(), ErrorCode::EmptyWord, "the table has no identity for the empty word");
    return *e;
}

} // namespace diagmon
