#include "diagmon/circles.hpp"

#include "diagmon/error.hpp"

#include <algorithm>

namespace diagmon {

CircleForest CircleForest::enclose(const CircleForest& inner)
{
    CircleForest c;
    c.outer_.push_back(inner);
    return c;
}

CircleForest CircleForest::generator(int i)
{
    require(i >= 1, ErrorCode::Range, "generator index must be positive");
    CircleForest c;
    for (int k = 0; k < i; ++k) {
        c = enclose(c);
    }
    return c;
}

std::size_t CircleForest::circle_count() const noexcept
{
    std::size_t n = outer_.size();
    for (const auto& t : outer_) {
        n += t.circle_count();
    }
    return n;
}

std::size_t CircleForest::depth() const noexcept
{
    std::size_t d = 0;
    for (const auto& t : outer_) {
        d = std::max(d, 1 + t.depth());
    }
    return d;
}

std::vector<CircleForest> CircleForest::decompose() const
{
    std::vector<CircleForest> out;
    for (const auto& t : outer_) {
        out.push_back(enclose(t));
    }
    return out;
}

CircleForest& CircleForest::operator+=(const CircleForest& other)
{
    std::vector<CircleForest> merged;
    merged.reserve(outer_.size() + other.outer_.size());
    std::merge(outer_.begin(), outer_.end(), other.outer_.begin(), other.outer_.end(),
               std::back_inserter(merged));
    outer_ = std::move(merged);
    return *this;
}

CircleForest CircleForest::times(std::uint64_t k) const
{
    CircleForest out;
    for (std::uint64_t i = 0; i < k; ++i) {
        out += *this;
    }
    return out;
}

bool CircleForest::contains_summand(const CircleForest& tree) const
{
    require(tree.indecomposable(), ErrorCode::Range, "summand must be indecomposable");
    return std::binary_search(outer_.begin(), outer_.end(), tree.outer_.front());
}

// Depth, then size, then the sorted outer contents lexicographically.
std::strong_ordering CircleForest::compare(const CircleForest& a, const CircleForest& b)
{
    if (auto c = a.depth() <=> b.depth(); c != 0) {
        return c;
    }
    if (auto c = a.circle_count() <=> b.circle_count(); c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(a.outer_.begin(), a.outer_.end(), b.outer_.begin(),
                                                  b.outer_.end(), compare);
}

std::string to_string(const CircleForest& c)
{
    if (c.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& t : c.outer()) {
        if (!out.empty()) {
            out += "+";
        }
        out += "(" + to_string(t) + ")";
    }
    return out;
}

CircleGroupElement::CircleGroupElement(const CircleForest& c)
{
    for (const auto& t : c.decompose()) {
        ++coeff_[t];
    }
}

CircleGroupElement& CircleGroupElement::operator+=(const CircleGroupElement& other)
{
    for (const auto& [t, k] : other.coeff_) {
        auto& slot = coeff_[t];
        slot += k;
        if (slot == 0) {
            coeff_.erase(t);
        }
    }
    return *this;
}

CircleGroupElement CircleGroupElement::negated() const
{
    CircleGroupElement out = *this;
    for (auto& [t, k] : out.coeff_) {
        k = -k;
    }
    return out;
}

OCWord::OCWord(std::vector<CircleForest> segments)
    : segments_(std::move(segments))
{
    require(!segments_.empty(), ErrorCode::Range, "a word needs at least one segment");
}

OCWord OCWord::wrapping()
{
    return OCWord(std::vector<CircleForest>(2));
}

OCWord operator*(const OCWord& a, const OCWord& b)
{
    std::vector<CircleForest> out(a.segments_.begin(), a.segments_.end());
    out.back() += b.segments_.front();
    out.insert(out.end(), b.segments_.begin() + 1, b.segments_.end());
    return OCWord(std::move(out));
}

} // namespace diagmon
