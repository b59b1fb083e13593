// Monoids and semigroups given by a full multiplication table.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace diagmon {

class FiniteMonoid {
public:
    using Element = std::uint32_t;

    FiniteMonoid() = default;

    // table[a * size + b] = ab. Validates closure, associativity and, when
    // given, the involution. Tables above the full-check limit need
    // generators, which are used for Light's associativity test.
    FiniteMonoid(std::size_t size, std::vector<Element> table,
                 std::optional<std::vector<Element>> involution = std::nullopt,
                 std::span<const Element> generators = {});

    std::size_t size() const noexcept { return size_; }
    Element mul(Element a, Element b) const noexcept { return table_[a * size_ + b]; }
    std::optional<Element> identity() const noexcept { return identity_; }
    bool has_involution() const noexcept { return !involution_.empty(); }
    Element star(Element a) const;

    std::vector<Element> idempotents() const;
    Element power(Element x, std::uint64_t t) const;
    // Smallest i >= 1 and p >= 1 with x^(i+p) = x^i.
    std::pair<std::uint64_t, std::uint64_t> index_period(Element x) const;

    static constexpr std::size_t kFullCheckLimit = 160;

private:
    std::size_t size_ = 0;
    std::vector<Element> table_;
    std::vector<Element> involution_;
    std::optional<Element> identity_;
};

// Adapter giving a table the value_type/mul/one/star interface used by
// identity evaluation. The table must outlive the adapter.
struct TableMonoid {
    using value_type = FiniteMonoid::Element;
    const FiniteMonoid* table = nullptr;

    value_type mul(value_type a, value_type b) const noexcept { return table->mul(a, b); }
    value_type one() const;
    value_type star(value_type a) const { return table->star(a); }
};

} // namespace diagmon
