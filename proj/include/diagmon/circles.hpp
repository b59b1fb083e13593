// Nested circle configurations and the groups/monoids built on them.
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace diagmon {

// A finite forest of nested circles, up to isotopy. Stored as the sorted list
// of the contents of its outermost circles.
class CircleForest {
public:
    CircleForest() = default; // the empty configuration

    static CircleForest enclose(const CircleForest& inner);
    // A fixed indecomposable: i nested circles (i >= 1).
    static CircleForest generator(int i);

    const std::vector<CircleForest>& outer() const noexcept { return outer_; }
    bool empty() const noexcept { return outer_.empty(); }
    bool indecomposable() const noexcept { return outer_.size() == 1; }
    std::size_t circle_count() const noexcept;
    std::size_t depth() const noexcept;

    // Indecomposable summands, each as a one-tree forest.
    std::vector<CircleForest> decompose() const;

    CircleForest& operator+=(const CircleForest& other);
    friend CircleForest operator+(CircleForest a, const CircleForest& b) { return a += b; }
    CircleForest times(std::uint64_t k) const;
    bool contains_summand(const CircleForest& tree) const;

    friend bool operator==(const CircleForest& a, const CircleForest& b) { return compare(a, b) == 0; }
    friend std::strong_ordering operator<=>(const CircleForest& a, const CircleForest& b)
    {
        return compare(a, b);
    }

private:
    static std::strong_ordering compare(const CircleForest& a, const CircleForest& b);

    std::vector<CircleForest> outer_;
};

std::string to_string(const CircleForest& c);

// Element of the free abelian group on indecomposable configurations.
class CircleGroupElement {
public:
    CircleGroupElement() = default;
    explicit CircleGroupElement(const CircleForest& c);

    const std::map<CircleForest, std::int64_t>& coefficients() const noexcept { return coeff_; }
    CircleGroupElement& operator+=(const CircleGroupElement& other);
    friend CircleGroupElement operator+(CircleGroupElement a, const CircleGroupElement& b) { return a += b; }
    CircleGroupElement negated() const;
    friend bool operator==(const CircleGroupElement&, const CircleGroupElement&) = default;

private:
    std::map<CircleForest, std::int64_t> coeff_; // keys are indecomposable, no zero values
};

// Word c_0, c_1, ..., c_q: configurations separated by q wrapping circles.
class OCWord {
public:
    OCWord() : segments_(1) {}
    explicit OCWord(std::vector<CircleForest> segments);
    static OCWord wrapping(); // one wrapping circle with empty sides

    const std::vector<CircleForest>& segments() const noexcept { return segments_; }
    std::size_t wrapping_count() const noexcept { return segments_.size() - 1; }

    friend OCWord operator*(const OCWord& a, const OCWord& b);
    friend bool operator==(const OCWord&, const OCWord&) = default;

private:
    std::vector<CircleForest> segments_;
};

} // namespace diagmon
