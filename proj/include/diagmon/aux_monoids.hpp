// Small explicit monoids used as models and separating examples.
#pragma once

#include "diagmon/circles.hpp"
#include "diagmon/cobordism.hpp"
#include "diagmon/error.hpp"
#include "diagmon/finite_monoid.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>

namespace diagmon {

std::uint64_t next_extension_instance() noexcept;

// Ideal extension of the rectangular band L x R by the monoid S, where S acts
// on L from the left and on R from the right:
//   s(l, r) = (sl, r),  (l, r)s = (l, rs),  (l, r)(l', r') = (l, r').
template <class S, class L, class R>
class IdealExtension {
public:
    struct Element {
        std::variant<S, std::pair<L, R>> value;
        std::uint64_t instance = 0;

        friend bool operator==(const Element& a, const Element& b)
        {
            return a.instance == b.instance && a.value == b.value;
        }
    };
    using value_type = Element;

    IdealExtension(std::function<S(const S&, const S&)> mul, S one,
                   std::function<L(const S&, const L&)> act_left,
                   std::function<R(const R&, const S&)> act_right)
        : mul_(std::move(mul))
        , one_(std::move(one))
        , act_left_(std::move(act_left))
        , act_right_(std::move(act_right))
        , instance_(next_extension_instance())
    {
    }

    Element unit(S s) const { return {std::move(s), instance_}; }
    Element pair(L l, R r) const { return {std::pair<L, R>{std::move(l), std::move(r)}, instance_}; }
    Element one() const { return unit(one_); }
    std::uint64_t instance() const noexcept { return instance_; }

    Element mul(const Element& x, const Element& y) const
    {
        require(x.instance == instance_ && y.instance == instance_, ErrorCode::InstanceMismatch,
                "elements belong to a different ideal extension");
        const S* xs = std::get_if<S>(&x.value);
        const S* ys = std::get_if<S>(&y.value);
        if (xs && ys) {
            return unit(mul_(*xs, *ys));
        }
        if (xs) {
            const auto& [l, r] = std::get<1>(y.value);
            return pair(act_left_(*xs, l), r);
        }
        const auto& [l, r] = std::get<1>(x.value);
        if (ys) {
            return pair(l, act_right_(r, *ys));
        }
        return pair(l, std::get<1>(y.value).second);
    }

private:
    std::function<S(const S&, const S&)> mul_;
    S one_;
    std::function<L(const S&, const L&)> act_left_;
    std::function<R(const R&, const S&)> act_right_;
    std::uint64_t instance_;
};

// Z x Z extended by (Z, +), acting by translation on both sides.
using IntegerExtension = IdealExtension<std::int64_t, std::int64_t, std::int64_t>;
IntegerExtension make_integer_extension();

// {0,1} x {0,1} extended by (Z, +), odd integers swapping 0 and 1.
using ParityExtension = IdealExtension<std::int64_t, int, int>;
ParityExtension make_parity_extension();

// Six-element monoid {1, (0,0), (0,1), (1,0), (1,1), 0}.
enum class A21 : std::uint8_t { One, E00, E01, E10, E11, Zero };
A21 a21_pair(int i, int j);
A21 a21_mul(A21 x, A21 y) noexcept;
A21 a21_star(A21 x) noexcept;
std::string to_string(A21 x);
FiniteMonoid a21_monoid(); // element k is static_cast<A21>(k)

// Endomorphisms of the one-point discrete base: genus on the In block,
// closed spectrum, genus on the Out block.
struct SpectrumTriple {
    int in = 0;
    ClosedSpectrum closed;
    int out = 0;

    friend bool operator==(const SpectrumTriple&, const SpectrumTriple&) = default;
};

SpectrumTriple triple_mul(const SpectrumTriple& x, const SpectrumTriple& y);
SpectrumTriple triple_sigma(const SpectrumTriple& x);
A21 triple_to_a21(const SpectrumTriple& x);
Cobordism triple_to_cobordism(const SpectrumTriple& x);

// Semidirect product (C x C) x Z, odd shifts swapping the two coordinates.
struct TwistedElement {
    CircleForest first;
    CircleForest second;
    std::int64_t shift = 0;

    friend bool operator==(const TwistedElement&, const TwistedElement&) = default;
};

struct TwistedMonoid {
    using value_type = TwistedElement;
    value_type one() const { return {}; }
    value_type mul(const value_type& x, const value_type& y) const;
    value_type star(const value_type& x) const;
};

// Adjoins a zero (represented by nullopt) to a monoid.
template <class M>
struct WithZero {
    using value_type = std::optional<typename M::value_type>;
    M base;

    value_type one() const { return base.one(); }
    value_type mul(const value_type& x, const value_type& y) const
    {
        if (!x || !y) {
            return std::nullopt;
        }
        return base.mul(*x, *y);
    }
    value_type star(const value_type& x) const
    {
        if (!x) {
            return std::nullopt;
        }
        return base.star(*x);
    }
};

// Semigroup of triples (a, b, c) with (a,b,c)(a',b',c') = (a, b + (c + a') + b', c'),
// where (x) encloses x in one more circle.
struct ReesTriple {
    CircleForest a;
    CircleForest b;
    CircleForest c;

    friend bool operator==(const ReesTriple&, const ReesTriple&) = default;
};

struct ReesSemigroup {
    using value_type = ReesTriple;
    value_type mul(const value_type& x, const value_type& y) const;
    value_type star(const value_type& x) const { return {x.c, x.b, x.a}; }
};

std::string to_string(const TwistedElement& x);
std::string to_string(const ReesTriple& x);

} // namespace diagmon
