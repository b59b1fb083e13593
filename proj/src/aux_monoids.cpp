#include "diagmon/aux_monoids.hpp"

#include <atomic>

namespace diagmon {

std::uint64_t next_extension_instance() noexcept
{
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1);
}

IntegerExtension make_integer_extension()
{
    return IntegerExtension([](std::int64_t a, std::int64_t b) { return a + b; }, 0,
                            [](std::int64_t s, std::int64_t l) { return s + l; },
                            [](std::int64_t r, std::int64_t s) { return r + s; });
}

ParityExtension make_parity_extension()
{
    auto flip = [](std::int64_t s, int x) { return (s % 2 != 0) ? 1 - x : x; };
    return ParityExtension([](std::int64_t a, std::int64_t b) { return a + b; }, 0,
                           [flip](std::int64_t s, int l) { return flip(s, l); },
                           [flip](int r, std::int64_t s) { return flip(s, r); });
}

A21 a21_pair(int i, int j)
{
    require((i == 0 || i == 1) && (j == 0 || j == 1), ErrorCode::Range, "indices must be 0 or 1");
    return static_cast<A21>(1 + 2 * i + j);
}

namespace {

int row(A21 x) { return (static_cast<int>(x) - 1) / 2; }
int col(A21 x) { return (static_cast<int>(x) - 1) % 2; }

} // namespace

A21 a21_mul(A21 x, A21 y) noexcept
{
    if (x == A21::One) {
        return y;
    }
    if (y == A21::One) {
        return x;
    }
    if (x == A21::Zero || y == A21::Zero) {
        return A21::Zero;
    }
    if (col(x) == 1 && row(y) == 1) {
        return A21::Zero;
    }
    return static_cast<A21>(1 + 2 * row(x) + col(y));
}

A21 a21_star(A21 x) noexcept
{
    if (x == A21::One || x == A21::Zero) {
        return x;
    }
    return static_cast<A21>(1 + 2 * col(x) + row(x));
}

std::string to_string(A21 x)
{
    switch (x) {
    case A21::One: return "1";
    case A21::Zero: return "0";
    default: return "(" + std::to_string(row(x)) + "," + std::to_string(col(x)) + ")";
    }
}

FiniteMonoid a21_monoid()
{
    constexpr std::size_t size = 6;
    std::vector<FiniteMonoid::Element> table(size * size);
    std::vector<FiniteMonoid::Element> involution(size);
    for (std::size_t a = 0; a < size; ++a) {
        involution[a] = static_cast<FiniteMonoid::Element>(a21_star(static_cast<A21>(a)));
        for (std::size_t b = 0; b < size; ++b) {
            table[a * size + b] =
                static_cast<FiniteMonoid::Element>(a21_mul(static_cast<A21>(a), static_cast<A21>(b)));
        }
    }
    return FiniteMonoid(size, std::move(table), std::move(involution));
}

SpectrumTriple triple_mul(const SpectrumTriple& x, const SpectrumTriple& y)
{
    SpectrumTriple out{x.in, x.closed, y.out};
    out.closed += y.closed;
    out.closed.add(x.out + y.in);
    return out;
}

SpectrumTriple triple_sigma(const SpectrumTriple& x)
{
    return {x.out, x.closed, x.in};
}

A21 triple_to_a21(const SpectrumTriple& x)
{
    require((x.in == 0 || x.in == 1) && (x.out == 0 || x.out == 1), ErrorCode::Range,
            "boundary genus must be 0 or 1");
    return x.closed.at(2) == 0 ? a21_pair(x.in, x.out) : A21::Zero;
}

Cobordism triple_to_cobordism(const SpectrumTriple& x)
{
    return make_cobordism(Partition::discrete(1, 1), SmallVec<Genus>{x.in, x.out}, x.closed, false);
}

TwistedElement TwistedMonoid::mul(const value_type& x, const value_type& y) const
{
    const bool swap = x.shift % 2 != 0;
    return {x.first + (swap ? y.second : y.first), x.second + (swap ? y.first : y.second),
            x.shift + y.shift};
}

TwistedElement TwistedMonoid::star(const value_type& x) const
{
    const bool swap = x.shift % 2 != 0;
    return {swap ? x.second : x.first, swap ? x.first : x.second, -x.shift};
}

ReesTriple ReesSemigroup::mul(const value_type& x, const value_type& y) const
{
    return {x.a, x.b + CircleForest::enclose(x.c + y.a) + y.b, y.c};
}

std::string to_string(const TwistedElement& x)
{
    return "((" + to_string(x.first) + ", " + to_string(x.second) + "), " + std::to_string(x.shift) + ")";
}

std::string to_string(const ReesTriple& x)
{
    return "(" + to_string(x.a) + ", " + to_string(x.b) + ", " + to_string(x.c) + ")";
}

} // namespace diagmon
